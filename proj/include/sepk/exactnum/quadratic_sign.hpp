#pragma once

#include "sepk/exactnum/big_rational.hpp"

namespace sepk {

/// Exact sign of a + b*sqrt(radicand) for integers a, b and radicand >= 0.
/// The radicand need not be squarefree or a non-square.
int sign_of_surd(const BigInt& a, const BigInt& b, const BigInt& radicand);

/// Exact sign of a + b*sqrt(d1) + c*sqrt(d2); d1, d2 >= 0.
int sign_of_two_surds(const BigInt& a, const BigInt& b, const BigInt& d1, const BigInt& c,
                      const BigInt& d2);

/// floor(b * sqrt(radicand)) for radicand >= 0.
BigInt floor_of_surd(const BigInt& b, const BigInt& radicand);

}  // namespace sepk
