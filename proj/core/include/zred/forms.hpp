#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>

#include "zred/integer.hpp"

namespace zred {

/// The binary quadratic form a x^2 + b xy + c y^2, written (a,b,c).
struct Form {
    Integer a;
    Integer b;
    Integer c;

    friend bool operator==(const Form&, const Form&) = default;
    friend bool operator<(const Form& lhs, const Form& rhs) {
        if (lhs.a != rhs.a) return lhs.a < rhs.a;
        if (lhs.b != rhs.b) return lhs.b < rhs.b;
        return lhs.c < rhs.c;
    }
};

std::ostream& operator<<(std::ostream& os, const Form& f);
std::string to_string(const Form& f);

struct FormHash {
    std::size_t operator()(const Form& f) const noexcept;
};

/// Matrix [[alpha, beta], [gamma, delta]] of determinant 1.
class UnimodularMatrix {
public:
    /// Throws DomainError unless alpha*delta - beta*gamma == 1.
    UnimodularMatrix(Integer alpha, Integer beta, Integer gamma, Integer delta);

    static UnimodularMatrix identity();

    const Integer& alpha() const { return alpha_; }
    const Integer& beta() const { return beta_; }
    const Integer& gamma() const { return gamma_; }
    const Integer& delta() const { return delta_; }

    friend UnimodularMatrix operator*(const UnimodularMatrix& m, const UnimodularMatrix& n);
    friend bool operator==(const UnimodularMatrix&, const UnimodularMatrix&) = default;

private:
    Integer alpha_;
    Integer beta_;
    Integer gamma_;
    Integer delta_;
};

Integer discriminant(const Form& f);

/// gcd(|a|,|b|,|c|); throws DomainError for the zero form.
Integer content(const Form& f);
bool is_primitive(const Form& f);

/// Discriminant positive and not a perfect square.
bool is_indefinite(const Form& f);
bool is_indefinite_discriminant(const Integer& delta);

/// Indefinite with ac < 0 and b > |a + c|.
bool is_g_reduced(const Form& f);
/// Indefinite with a, b, c > 0 and b > a + c.
bool is_z_reduced(const Form& f);

/// f(alpha x + beta y, gamma x + delta y). This is a right action:
/// act(act(f, m), n) == act(f, m * n).
Form act(const Form& f, const UnimodularMatrix& m);

/// (a,b,c) -> (c,b,a)
Form reverse(const Form& f);
/// (a,b,c) -> (-a,b,-c)
Form rho(const Form& f);
/// (a,b,c) -> (ua,ub,uc); requires u >= 1.
Form scalar_mul(const Integer& u, const Form& f);

}  // namespace zred
