#pragma once

#include <memory>
#include <string>
#include <vector>

#include "holo/errors.hpp"

namespace holo::expr {

// AST for the small expression language used to define custom local
// connection forms and region predicates. Variables are m0[j] and m1[j].
//
// Grammar (loosest to tightest binding):
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' unary)?          (right associative)
//   atom    := number | 'pi' | var | call | '(' expr ')'

enum class NodeKind { number, const_pi, variable, unary_minus, binary, call };

enum class BinOp { add, sub, mul, div, pow };

enum class Func { sin, cos, exp, log, abs, pow, mod2pi };

struct Node {
    NodeKind kind;
    std::size_t offset = 0;  // byte offset in the source, for error messages

    double number = 0.0;
    int var_slot = 0;   // 0 -> m0, 1 -> m1
    int var_index = 0;  // component index
    BinOp op = BinOp::add;
    Func func = Func::sin;
    std::vector<std::unique_ptr<Node>> args;
};

using Ast = std::unique_ptr<Node>;

Ast parse(const std::string& text);

// Fully parenthesized rendering; parse(print(parse(t))) == parse(t).
std::string print(const Node& ast);

double evaluate(const Node& ast, const std::vector<double>& m0,
                const std::vector<double>& m1);

// Largest variable component index referenced, or -1 if none.
int max_var_index(const Node& ast);

bool equal(const Node& a, const Node& b);

}  // namespace holo::expr
