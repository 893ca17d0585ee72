#pragma once

// Prefix expression syntax for the qdemo subcommands.
//
// Index sets:
//   N | empty | res <a> <m> | thr <m> | fin <n>... | cofin <n>...
//   | and <set> <set> | or <set> <set> | not <set>
// Sequences:
//   const <q> | id | ratfn <c0> <c1> ... / <d0> <d1> ...
//   | patch <n> <q> <seq>
// Parentheses may group any subexpression; rationals are written like 1/2.

#include <stdexcept>
#include <string>

#include "logicprob/qnumber.hpp"

namespace logicprob::cli {

struct expr_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IndexSet parse_set_expr(const std::string& text);
SeqReal parse_seq_expr(const std::string& text);

} // namespace logicprob::cli
