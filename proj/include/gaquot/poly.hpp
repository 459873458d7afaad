#ifndef GAQUOT_POLY_HPP
#define GAQUOT_POLY_HPP

// Sparse multivariate polynomials over Q with an explicit, ordered
// variable table.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gaquot {

using Rational = mpq_class;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class VarTableMismatch : public Error {
public:
    using Error::Error;
};

// Ordered list of variable names. Copies share storage; equality is by
// content.
class VarTable {
public:
    VarTable();
    explicit VarTable(std::vector<std::string> names);
    VarTable(std::initializer_list<std::string> names);

    std::size_t size() const { return names_->size(); }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    const std::vector<std::string>& names() const { return *names_; }

    std::optional<std::size_t> find(std::string_view name) const;
    std::size_t index(std::string_view name) const;  // throws if absent
    bool contains(std::string_view name) const { return find(name).has_value(); }

    // Table with `other`'s names appended (names must not collide).
    VarTable concat(const VarTable& other) const;
    VarTable with_appended(std::string name) const;

    bool operator==(const VarTable& other) const;
    bool operator!=(const VarTable& other) const { return !(*this == other); }

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

// Graded lexicographic order, largest first: total degree, then the
// exponent of the first variable, then the second, ...
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    Poly() = default;
    explicit Poly(VarTable vars) : vars_(std::move(vars)) {}
    Poly(VarTable vars, TermMap terms);

    static Poly constant(const VarTable& vars, const Rational& c);
    static Poly variable(const VarTable& vars, std::string_view name);
    static Poly variable(const VarTable& vars, std::size_t index);
    static Poly monomial(const VarTable& vars, Monomial m, const Rational& c = 1);

    const VarTable& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    int total_degree() const;  // -1 for the zero polynomial
    unsigned degree_in(std::size_t var) const;
    bool involves(std::size_t var) const;
    std::vector<std::size_t> support() const;  // indices of variables that occur

    // Largest term under grlex; precondition: non-zero.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    Poly& operator+=(const Poly& q);
    Poly& operator-=(const Poly& q);
    Poly& operator*=(const Poly& q);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly p, const Poly& q) { return p += q; }
    friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
    friend Poly operator*(const Poly& p, const Poly& q);
    friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
    friend Poly operator*(const Rational& c, Poly p) { return p *= c; }

    bool operator==(const Poly& q) const;
    bool operator!=(const Poly& q) const { return !(*this == q); }

    Poly pow(unsigned e) const;
    Poly derivative(std::size_t var) const;
    Poly derivative(std::string_view var) const { return derivative(vars_.index(var)); }

    // Part of total degree d.
    Poly homogeneous_part(unsigned d) const;

    // Ring homomorphism sending variable i to images[i]; all images must
    // share one table, which becomes the table of the result.
    Poly substitute(std::span<const Poly> images) const;
    // Named form: every variable occurring in *this must be assigned.
    Poly substitute(const std::map<std::string, Poly>& assign) const;
    // Sets the listed variables to constants, keeping the table.
    Poly specialize(const std::map<std::string, Rational>& values) const;

    Rational evaluate(std::span<const Rational> point) const;

    // Re-expresses *this over `target`, which must contain every variable
    // that occurs.
    Poly embed(const VarTable& target) const;

    // Scales to integer coefficients with content 1 and a positive leading
    // coefficient. Zero stays zero.
    Poly primitive() const;

    std::string str() const;

private:
    void check_table(const Poly& q) const;
    void add_term(const Monomial& m, const Rational& c);

    VarTable vars_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// Exact quotient p / q, or nullopt when q does not divide p.
std::optional<Poly> exact_divide(const Poly& p, const Poly& q);

std::string render_rational(const Rational& c);

}  // namespace gaquot

#endif
