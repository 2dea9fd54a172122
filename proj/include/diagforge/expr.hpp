#pragma once

// Plain-text prefix-notation expressions over exact scalars:
//   (+ a b ...)  (* a b ...)  (- a b)  (- a)  (/ a b)  (^ a n)
// with integer or p/q rational literals and symbol names. A symbol equal to
// the declared field generator becomes the extension element.

#include "diagforge/ratfunc.hpp"

#include <string>

namespace diagforge {

struct ExprError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RatFunc parse_expr(const std::string& src, const FieldPtr& field = nullptr);

}  // namespace diagforge
