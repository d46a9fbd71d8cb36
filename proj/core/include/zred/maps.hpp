#pragma once

#include <cstddef>
#include <variant>

#include "zred/contfrac.hpp"
#include "zred/forms.hpp"
#include "zred/pell.hpp"
#include "zred/sequences.hpp"
#include "zred/strings.hpp"

namespace zred {

// The overloads taking a PellSolution skip the Pell solve; the solution must
// be the fundamental one for the form's discriminant (checked cheaply).

/// Dirichlet's string of a G-reduced form with a > 0: the expansion of
/// z / (a u), z = (t + b u) / 2, with odd length iff epsilon = -4.
NatString gamma(const Form& f);
NatString gamma(const Form& f, const PellSolution& pell);

/// Bead sequence of a Z-reduced form: the expansion of z / (z - a u) with
/// even length iff epsilon = -4.
NatString beta(const Form& f);
NatString beta(const Form& f, const PellSolution& pell);

/// sb(beta(f))
BinString sigma(const Form& f);
BinString sigma(const Form& f, const PellSolution& pell);

/// G-reduced to Z-reduced: f(x+y, y) when a > 0, f(x, x+y) when c > 0.
Form mu(const Form& f);
UnimodularMatrix mu_matrix(const Form& f);

/// Z-reduced form with the given bead sequence (length >= 2):
///   a = [q1-1, q2, ..., ql], c = [q1, ..., q(l-1), ql-1],
///   b = [q1, ..., ql] + [q1-1, q2, ..., q(l-1), ql-1].
Form tau(const NatString& s);

/// G-reduced form with a > 0 and the given Dirichlet string (length >= 1):
///   a = [q2..ql], b = [q1..ql] - [q2..q(l-1)], c = -[q1..q(l-1)].
Form xi(const NatString& s);

struct ClassInvariants {
    std::size_t weight = 0;
    std::size_t length = 0;
    Parity parity = Parity::even;  // parity of the weight

    friend bool operator==(const ClassInvariants&, const ClassInvariants&) = default;
};

ClassInvariants class_invariants(const Form& f);
ClassInvariants class_invariants(const Form& f, const PellSolution& pell);

/// Necklace of sigma(f) for odd weight; for even weight the alternating
/// necklace with the first 1 of sigma(f) colored green.
using SigmaNecklace = std::variant<Necklace<BinString>, AlternatingNecklace>;

SigmaNecklace sigma_bar(const Form& f);
SigmaNecklace sigma_bar(const Form& f, const PellSolution& pell);
std::string to_string(const SigmaNecklace& n);

/// sigma(f) with every 0 replaced by 01.
BinString denjoy_period(const Form& f);
BinString denjoy_period(const Form& f, const PellSolution& pell);

/// (b - 2a + sqrt(delta)) / (2a), the surd whose Denjoy expansion the period describes.
QuadraticSurd denjoy_surd_of(const Form& f);

}  // namespace zred
