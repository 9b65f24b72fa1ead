#include "binedge/buchberger.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace binedge::gb {

Monomial Monomial::var(int nvars, int index, int exp) {
    Monomial m(nvars);
    m.e_[index] = exp;
    return m;
}

int Monomial::total_degree() const {
    int d = 0;
    for (int x : e_) d += x;
    return d;
}

bool Monomial::is_one() const {
    for (int x : e_)
        if (x) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial m(*this);
    for (int i = 0; i < nvars(); ++i) m.e_[i] += o.e_[i];
    return m;
}

bool Monomial::divides(const Monomial& m) const {
    for (int i = 0; i < nvars(); ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& m) const {
    Monomial q(m);
    for (int i = 0; i < nvars(); ++i) q.e_[i] -= e_[i];
    return q;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a);
    for (int i = 0; i < a.nvars(); ++i) m.e_[i] = std::max(a.e_[i], b.e_[i]);
    return m;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.e_[i] > 0 && b.e_[i] > 0) return false;
    return true;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a.e_[i] != b.e_[i]) return a.e_[i] < b.e_[i] ? -1 : 1;
    return 0;
}

const Monomial& Polynomial::leading_monomial() const {
    return terms_.begin()->first;
}

const Rational& Polynomial::leading_coeff() const {
    return terms_.begin()->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::times(const Monomial& m, const Rational& c) const {
    Polynomial out(nvars_);
    if (c == 0) return out;
    for (const auto& [mono, coef] : terms_) out.terms_.emplace(mono * m, coef * c);
    return out;
}

void Polynomial::make_monic() {
    if (is_zero()) return;
    Rational lc = leading_coeff();
    if (lc == 1) return;
    for (auto& [m, c] : terms_) c /= lc;
}

std::string Polynomial::to_text(const std::function<std::string(int)>& var_name) const {
    if (is_zero()) return "0";
    std::ostringstream s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                s << "-";
                a = -a;
            }
        } else {
            s << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (a != 1 || m.is_one()) {
            s << a;
            printed = true;
        }
        for (int i = 0; i < m.nvars(); ++i)
            if (m.exp(i) > 0) {
                if (printed) s << "*";
                s << var_name(i);
                if (m.exp(i) > 1) s << "^" << m.exp(i);
                printed = true;
            }
    }
    return s.str();
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    const Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial out = f.times(f.leading_monomial().quotient_of(l),
                             Rational(1) / f.leading_coeff());
    out -= g.times(g.leading_monomial().quotient_of(l), Rational(1) / g.leading_coeff());
    return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis) {
    Polynomial h = f;
    Polynomial r(f.nvars());
    while (!h.is_zero()) {
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_monomial().divides(h.leading_monomial())) {
                Monomial q = g.leading_monomial().quotient_of(h.leading_monomial());
                h -= g.times(q, h.leading_coeff() / g.leading_coeff());
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            r.add_term(h.leading_monomial(), h.leading_coeff());
            Polynomial lead(f.nvars());
            lead.add_term(h.leading_monomial(), h.leading_coeff());
            h -= lead;
        }
    }
    return r;
}

namespace {

bool is_unit_binomial(const Polynomial& p) {
    if (p.term_count() != 2) return false;
    for (const auto& [m, c] : p.terms())
        if (c != 1 && c != -1) return false;
    return true;
}

} // namespace

BuchbergerResult reduced_groebner(std::vector<Polynomial> gens, const BuchbergerOptions& opt) {
    BuchbergerResult res;
    std::vector<Polynomial> g;
    for (auto& p : gens)
        if (!p.is_zero()) g.push_back(std::move(p));
    if (g.empty()) return res;

    std::deque<std::pair<int, int>> pending;
    std::set<std::pair<int, int>> treated;
    auto push_pairs = [&](int upto) {
        for (int i = 0; i < upto; ++i) pending.emplace_back(i, upto);
    };
    for (int j = 1; j < static_cast<int>(g.size()); ++j) push_pairs(j);

    while (!pending.empty()) {
        size_t pick = 0;
        if (!opt.select_first) {
            // Normal strategy: treat the pair with the smallest lcm first.
            Monomial best = Monomial::lcm(g[pending[0].first].leading_monomial(),
                                          g[pending[0].second].leading_monomial());
            for (size_t k = 1; k < pending.size(); ++k) {
                Monomial l = Monomial::lcm(g[pending[k].first].leading_monomial(),
                                           g[pending[k].second].leading_monomial());
                if (Monomial::cmp(l, best) < 0) {
                    best = l;
                    pick = k;
                }
            }
        }
        auto [i, j] = pending[pick];
        pending.erase(pending.begin() + static_cast<long>(pick));
        treated.insert({i, j});

        const Monomial& lti = g[i].leading_monomial();
        const Monomial& ltj = g[j].leading_monomial();
        if (Monomial::coprime(lti, ltj)) continue;
        // Chain criterion: a third element dividing the lcm whose pairs with
        // both ends were already treated makes this pair redundant.
        Monomial l = Monomial::lcm(lti, ltj);
        bool skip = false;
        for (int k = 0; k < static_cast<int>(g.size()) && !skip; ++k) {
            if (k == i || k == j) continue;
            if (!g[k].leading_monomial().divides(l)) continue;
            auto p1 = std::minmax(i, k);
            auto p2 = std::minmax(j, k);
            if (treated.count({p1.first, p1.second}) && treated.count({p2.first, p2.second}))
                skip = true;
        }
        if (skip) continue;

        if (++res.steps > opt.step_guard)
            throw GuardError("Buchberger step guard of " + std::to_string(opt.step_guard) +
                             " exceeded");
        Polynomial r = normal_form(s_polynomial(g[i], g[j]), g);
        if (r.is_zero()) continue;
        if (opt.track_binomial && !is_unit_binomial(r)) ++res.binomial_violations;
        g.push_back(std::move(r));
        push_pairs(static_cast<int>(g.size()) - 1);
    }

    // Minimalize: drop elements whose leading term another one divides;
    // among equal leading terms the first survives.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < g.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < g.size(); ++j) {
            if (i == j) continue;
            const Monomial& a = g[j].leading_monomial();
            const Monomial& b = g[i].leading_monomial();
            if (a.divides(b) && (!(a == b) || j < i)) {
                keep = false;
                break;
            }
        }
        if (keep) minimal.push_back(g[i]);
    }
    // Tail-reduce each element against the others.
    std::vector<Polynomial> reduced = minimal;
    for (size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        for (size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = normal_form(reduced[i], others);
        reduced[i].make_monic();
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return Monomial::cmp(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    res.basis = std::move(reduced);
    return res;
}

int var_x(int n, int v) {
    (void)n;
    return v - 1;
}

int var_y(int n, int v) {
    return n + v - 1;
}

std::string default_var_name(int n, int index) {
    if (index < n) return "x" + std::to_string(index + 1);
    return "y" + std::to_string(index - n + 1);
}

namespace {

Polynomial edge_binomial(int nvars, int n, int i, int j) {
    Polynomial f(nvars);
    f.add_term(Monomial::var(nvars, var_x(n, i)) * Monomial::var(nvars, var_y(n, j)), 1);
    f.add_term(Monomial::var(nvars, var_x(n, j)) * Monomial::var(nvars, var_y(n, i)), -1);
    return f;
}

} // namespace

std::vector<Polynomial> edge_generators(const Graph& g) {
    const int n = g.n(), nvars = 2 * n;
    std::vector<Polynomial> out;
    out.reserve(g.edges().size());
    for (auto [i, j] : g.edges()) out.push_back(edge_binomial(nvars, n, i, j));
    return out;
}

Polynomial expand_element(const GroebnerElement& el, int n) {
    const int nvars = 2 * n;
    Monomial u(nvars);
    for (int v : el.x_support) u = u * Monomial::var(nvars, var_x(n, v));
    for (int v : el.y_support) u = u * Monomial::var(nvars, var_y(n, v));
    return edge_binomial(nvars, n, el.edge.first, el.edge.second).times(u, 1);
}

bool oracle_matches(const Graph& g, int max_n, const BuchbergerOptions& opt) {
    if (g.n() > max_n)
        throw GuardError("Buchberger certification limited to n <= " + std::to_string(max_n) +
                         ", got n = " + std::to_string(g.n()));
    auto engine = reduced_groebner(edge_generators(g), opt).basis;
    std::vector<Polynomial> expanded;
    for (const auto& el : groebner_basis(g)) expanded.push_back(expand_element(el, g.n()));
    std::sort(expanded.begin(), expanded.end(), [](const Polynomial& a, const Polynomial& b) {
        return Monomial::cmp(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return engine == expanded;
}

std::vector<Polynomial> prime_component_generators(const Graph& g, const PrimeComponent& pc) {
    const int n = g.n(), nvars = 2 * n;
    std::vector<Polynomial> out;
    for (int v : pc.s) {
        Polynomial xv(nvars), yv(nvars);
        xv.add_term(Monomial::var(nvars, var_x(n, v)), 1);
        yv.add_term(Monomial::var(nvars, var_y(n, v)), 1);
        out.push_back(std::move(xv));
        out.push_back(std::move(yv));
    }
    for (const auto& comp : pc.components)
        for (size_t a = 0; a < comp.size(); ++a)
            for (size_t b = a + 1; b < comp.size(); ++b)
                out.push_back(edge_binomial(nvars, n, comp[a], comp[b]));
    return out;
}

std::vector<Polynomial> intersect_ideals(const std::vector<Polynomial>& a,
                                         const std::vector<Polynomial>& b,
                                         const BuchbergerOptions& opt) {
    if (a.empty() || b.empty()) return {};
    const int nvars = a.front().nvars();
    const int lifted_vars = nvars + 1; // auxiliary variable first, then the ring
    auto lift = [&](const Polynomial& p, bool with_t, bool with_one_minus_t) {
        Polynomial out(lifted_vars);
        for (const auto& [m, c] : p.terms()) {
            Monomial shifted(lifted_vars);
            for (int i = 0; i < nvars; ++i)
                if (m.exp(i)) shifted = shifted * Monomial::var(lifted_vars, i + 1, m.exp(i));
            if (with_t) out.add_term(shifted * Monomial::var(lifted_vars, 0), c);
            if (with_one_minus_t) {
                out.add_term(shifted, c);
                out.add_term(shifted * Monomial::var(lifted_vars, 0), -c);
            }
        }
        return out;
    };
    std::vector<Polynomial> gens;
    for (const auto& p : a) gens.push_back(lift(p, true, false));
    for (const auto& p : b) gens.push_back(lift(p, false, true));
    auto lifted_basis = reduced_groebner(std::move(gens), opt).basis;
    std::vector<Polynomial> projected;
    for (const auto& p : lifted_basis) {
        bool has_t = false;
        for (const auto& [m, c] : p.terms())
            if (m.exp(0) > 0) {
                has_t = true;
                break;
            }
        if (has_t) continue;
        Polynomial q(nvars);
        for (const auto& [m, c] : p.terms()) {
            Monomial back(nvars);
            for (int i = 0; i < nvars; ++i)
                if (m.exp(i + 1)) back = back * Monomial::var(nvars, i, m.exp(i + 1));
            q.add_term(back, c);
        }
        projected.push_back(std::move(q));
    }
    return reduced_groebner(std::move(projected), opt).basis;
}

} // namespace binedge::gb
