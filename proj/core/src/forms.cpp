#include "zred/forms.hpp"

#include <ostream>
#include <sstream>

#include <boost/container_hash/hash.hpp>

namespace zred {

std::ostream& operator<<(std::ostream& os, const Form& f) {
    return os << '(' << f.a << ',' << f.b << ',' << f.c << ')';
}

std::string to_string(const Form& f) {
    std::ostringstream os;
    os << f;
    return os.str();
}

std::size_t FormHash::operator()(const Form& f) const noexcept {
    std::size_t seed = 0;
    boost::hash_combine(seed, boost::multiprecision::hash_value(f.a));
    boost::hash_combine(seed, boost::multiprecision::hash_value(f.b));
    boost::hash_combine(seed, boost::multiprecision::hash_value(f.c));
    return seed;
}

UnimodularMatrix::UnimodularMatrix(Integer alpha, Integer beta, Integer gamma, Integer delta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)),
      delta_(std::move(delta)) {
    if (alpha_ * delta_ - beta_ * gamma_ != 1) {
        throw DomainError("matrix is not unimodular (determinant != 1)");
    }
}

UnimodularMatrix UnimodularMatrix::identity() {
    return UnimodularMatrix(1, 0, 0, 1);
}

UnimodularMatrix operator*(const UnimodularMatrix& m, const UnimodularMatrix& n) {
    return UnimodularMatrix(m.alpha_ * n.alpha_ + m.beta_ * n.gamma_,
                            m.alpha_ * n.beta_ + m.beta_ * n.delta_,
                            m.gamma_ * n.alpha_ + m.delta_ * n.gamma_,
                            m.gamma_ * n.beta_ + m.delta_ * n.delta_);
}

Integer discriminant(const Form& f) {
    return f.b * f.b - 4 * f.a * f.c;
}

Integer content(const Form& f) {
    if (f.a == 0 && f.b == 0 && f.c == 0) throw DomainError("content of the zero form");
    return gcd(gcd(abs(f.a), abs(f.b)), abs(f.c));
}

bool is_primitive(const Form& f) {
    return content(f) == 1;
}

bool is_indefinite_discriminant(const Integer& delta) {
    return delta > 0 && !is_perfect_square(delta);
}

bool is_indefinite(const Form& f) {
    return is_indefinite_discriminant(discriminant(f));
}

bool is_g_reduced(const Form& f) {
    if (f.a * f.c >= 0) return false;
    if (f.b <= abs(f.a + f.c)) return false;
    return is_indefinite(f);
}

bool is_z_reduced(const Form& f) {
    if (f.a <= 0 || f.b <= 0 || f.c <= 0) return false;
    if (f.b <= f.a + f.c) return false;
    return is_indefinite(f);
}

Form act(const Form& f, const UnimodularMatrix& m) {
    const Integer& al = m.alpha();
    const Integer& be = m.beta();
    const Integer& ga = m.gamma();
    const Integer& de = m.delta();
    // a(al x + be y)^2 + b(al x + be y)(ga x + de y) + c(ga x + de y)^2
    return Form{
        f.a * al * al + f.b * al * ga + f.c * ga * ga,
        2 * f.a * al * be + f.b * (al * de + be * ga) + 2 * f.c * ga * de,
        f.a * be * be + f.b * be * de + f.c * de * de,
    };
}

Form reverse(const Form& f) {
    return Form{f.c, f.b, f.a};
}

Form rho(const Form& f) {
    return Form{-f.a, f.b, -f.c};
}

Form scalar_mul(const Integer& u, const Form& f) {
    if (u < 1) throw DomainError("scalar multiplier must be positive");
    return Form{u * f.a, u * f.b, u * f.c};
}

}  // namespace zred
