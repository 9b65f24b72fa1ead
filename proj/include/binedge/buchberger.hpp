#ifndef BINEDGE_BUCHBERGER_HPP
#define BINEDGE_BUCHBERGER_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "binedge/admissible.hpp"
#include "binedge/graph.hpp"
#include "binedge/primes.hpp"

namespace binedge::gb {

using Rational = boost::multiprecision::cpp_rational;

/// Dense exponent vector. Variables are totally ordered by index: a lower
/// index is a larger variable, so comparison is plain lexicographic on the
/// exponent vector. For a graph on n vertices, index v-1 is x_v and
/// index n+v-1 is y_v, realizing x_1 > ... > x_n > y_1 > ... > y_n.
class Monomial {
public:
    explicit Monomial(int nvars) : e_(nvars, 0) {}
    static Monomial var(int nvars, int index, int exp = 1);

    int nvars() const { return static_cast<int>(e_.size()); }
    int exp(int i) const { return e_[i]; }
    int total_degree() const;
    bool is_one() const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& m) const;
    /// m / *this, requires divides(m).
    Monomial quotient_of(const Monomial& m) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);
    static bool coprime(const Monomial& a, const Monomial& b);

    static int cmp(const Monomial& a, const Monomial& b); // <0, 0, >0
    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator<(const Monomial& o) const { return cmp(*this, o) < 0; }

private:
    std::vector<int> e_;
};

struct MonoLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) > 0;
    }
};

/// Sparse polynomial with exact rational coefficients; terms kept in
/// descending lexicographic order so the leading term is the first entry.
class Polynomial {
public:
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<Monomial, Rational, MonoLexGreater>& terms() const { return terms_; }
    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    void add_term(const Monomial& m, const Rational& c);
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    /// *this scaled by c * m.
    Polynomial times(const Monomial& m, const Rational& c) const;
    void make_monic();

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    std::string to_text(const std::function<std::string(int)>& var_name) const;

private:
    int nvars_;
    std::map<Monomial, Rational, MonoLexGreater> terms_;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);
/// Full reduction modulo the list; every term of the result is irreducible.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis);

struct BuchbergerOptions {
    long long step_guard = 500000; // treated S-pairs
    bool select_first = false;     // FIFO instead of smallest-lcm selection
    bool track_binomial = false;   // count non-(+-1 binomial) intermediates
};

struct BuchbergerResult {
    std::vector<Polynomial> basis; // reduced: monic, self-irreducible, sorted by LT descending
    long long steps = 0;
    long long binomial_violations = 0;
};

BuchbergerResult reduced_groebner(std::vector<Polynomial> gens,
                                  const BuchbergerOptions& opt = {});

int var_x(int n, int v);
int var_y(int n, int v);
std::string default_var_name(int n, int index);

/// One binomial x_i y_j - x_j y_i per edge, over 2n variables.
std::vector<Polynomial> edge_generators(const Graph& g);

/// The polynomial u_pi * f_ij of a basis element, over 2n variables.
Polynomial expand_element(const GroebnerElement& el, int n);

/// True when the admissible-path basis and the Buchberger engine agree as
/// sets of polynomials. Guarded; meant for small n.
bool oracle_matches(const Graph& g, int max_n = 5, const BuchbergerOptions& opt = {});

/// Generators of the component ideal: the variables of S plus the edge
/// binomials of complete graphs on each component. Already a Groebner basis.
std::vector<Polynomial> prime_component_generators(const Graph& g, const PrimeComponent& pc);

/// Ideal intersection by the auxiliary-variable elimination trick.
std::vector<Polynomial> intersect_ideals(const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b,
                                         const BuchbergerOptions& opt = {});

} // namespace binedge::gb

#endif
