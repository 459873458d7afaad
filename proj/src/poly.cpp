#include "gaquot/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gaquot {

VarTable::VarTable() : names_(std::make_shared<const std::vector<std::string>>()) {}

VarTable::VarTable(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names))) {
    std::vector<std::string> sorted = *names_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw Error("duplicate variable name in table");
}

VarTable::VarTable(std::initializer_list<std::string> names)
    : VarTable(std::vector<std::string>(names)) {}

std::optional<std::size_t> VarTable::find(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i)
        if ((*names_)[i] == name) return i;
    return std::nullopt;
}

std::size_t VarTable::index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw Error("unknown variable '" + std::string(name) + "'");
}

VarTable VarTable::concat(const VarTable& other) const {
    std::vector<std::string> all = *names_;
    all.insert(all.end(), other.names().begin(), other.names().end());
    return VarTable(std::move(all));
}

VarTable VarTable::with_appended(std::string name) const {
    std::vector<std::string> all = *names_;
    all.push_back(std::move(name));
    return VarTable(std::move(all));
}

bool VarTable::operator==(const VarTable& other) const {
    return names_ == other.names_ || *names_ == *other.names_;
}

unsigned total_degree(const Monomial& m) {
    return std::accumulate(m.begin(), m.end(), 0u);
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly::Poly(VarTable vars, TermMap terms) : vars_(std::move(vars)) {
    for (auto& [m, c] : terms) {
        if (m.size() != vars_.size()) throw Error("monomial length does not match variable table");
        if (c == 0) continue;
        auto it = terms_.emplace(m, c).first;
        it->second.canonicalize();
    }
}

Poly Poly::constant(const VarTable& vars, const Rational& c) {
    Poly p(vars);
    if (c != 0) p.terms_.emplace(Monomial(vars.size(), 0), c).first->second.canonicalize();
    return p;
}

Poly Poly::variable(const VarTable& vars, std::string_view name) {
    return variable(vars, vars.index(name));
}

Poly Poly::variable(const VarTable& vars, std::size_t index) {
    Monomial m(vars.size(), 0);
    m.at(index) = 1;
    return monomial(vars, std::move(m));
}

Poly Poly::monomial(const VarTable& vars, Monomial m, const Rational& c) {
    if (m.size() != vars.size()) throw Error("monomial length does not match variable table");
    Poly p(vars);
    if (c != 0) p.terms_.emplace(std::move(m), c).first->second.canonicalize();
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && gaquot::total_degree(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const {
    return coefficient(Monomial(vars_.size(), 0));
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(gaquot::total_degree(terms_.begin()->first));
}

unsigned Poly::degree_in(std::size_t var) const {
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

bool Poly::involves(std::size_t var) const {
    return std::any_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first[var] > 0; });
}

std::vector<std::size_t> Poly::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (involves(i)) out.push_back(i);
    return out;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw Error("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
    if (terms_.empty()) throw Error("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

void Poly::check_table(const Poly& q) const {
    if (vars_ != q.vars_) throw VarTableMismatch("variable tables differ");
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& q) {
    check_table(q);
    for (const auto& [m, c] : q.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& q) {
    check_table(q);
    for (const auto& [m, c] : q.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& p, const Poly& q) {
    p.check_table(q);
    Poly r(p.vars_);
    Monomial m(p.vars_.size());
    for (const auto& [mp, cp] : p.terms_) {
        for (const auto& [mq, cq] : q.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = mp[i] + mq[i];
            r.add_term(m, cp * cq);
        }
    }
    return r;
}

Poly& Poly::operator*=(const Poly& q) {
    *this = *this * q;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

bool Poly::operator==(const Poly& q) const {
    return vars_ == q.vars_ && terms_ == q.terms_;
}

Poly Poly::pow(unsigned e) const {
    Poly result = constant(vars_, 1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

Poly Poly::derivative(std::size_t var) const {
    if (var >= vars_.size()) throw Error("derivative: variable index out of range");
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial dm = m;
        --dm[var];
        r.add_term(dm, c * m[var]);
    }
    return r;
}

Poly Poly::homogeneous_part(unsigned d) const {
    Poly r(vars_);
    for (const auto& [m, c] : terms_)
        if (gaquot::total_degree(m) == d) r.terms_.emplace(m, c);
    return r;
}

Poly Poly::substitute(std::span<const Poly> images) const {
    if (images.size() != vars_.size()) throw Error("substitute: image count does not match variable table");
    VarTable target;
    bool have_target = false;
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (!involves(i)) continue;
        if (!have_target) {
            target = images[i].vars();
            have_target = true;
        } else if (images[i].vars() != target) {
            throw VarTableMismatch("substitute: images use different variable tables");
        }
    }
    if (!have_target) {
        // Constant polynomial: take any image table, if any were supplied.
        if (!images.empty()) target = images[0].vars();
        return constant(target, constant_term());
    }

    // powers[i][e] = images[i]^e, filled on demand
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](std::size_t i, unsigned e) -> const Poly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(constant(target, 1));
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    Poly result(target);
    for (const auto& [m, c] : terms_) {
        Poly term = constant(target, c);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) term *= power(i, m[i]);
        result += term;
    }
    return result;
}

Poly Poly::substitute(const std::map<std::string, Poly>& assign) const {
    std::vector<Poly> images(vars_.size());
    std::optional<VarTable> target;
    for (const auto& [name, img] : assign) {
        if (!target) target = img.vars();
        else if (img.vars() != *target)
            throw VarTableMismatch("substitute: images use different variable tables");
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = assign.find(vars_.name(i));
        if (it != assign.end()) {
            images[i] = it->second;
        } else if (involves(i)) {
            throw Error("substitute: no assignment for variable '" + vars_.name(i) + "'");
        } else {
            images[i] = Poly(target ? *target : vars_);
        }
    }
    if (vars_.size() == 0) return constant(target ? *target : vars_, constant_term());
    return substitute(std::span<const Poly>(images));
}

Poly Poly::specialize(const std::map<std::string, Rational>& values) const {
    std::vector<std::optional<Rational>> at(vars_.size());
    for (const auto& [name, v] : values) at[vars_.index(name)] = v;
    Poly r(vars_);
    for (const auto& [m, c] : terms_) {
        Monomial nm = m;
        Rational nc = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (!at[i] || m[i] == 0) continue;
            Rational f = 1;
            for (unsigned e = 0; e < m[i]; ++e) f *= *at[i];
            nc *= f;
            nm[i] = 0;
        }
        r.add_term(nm, nc);
    }
    return r;
}

Rational Poly::evaluate(std::span<const Rational> point) const {
    if (point.size() != vars_.size()) throw Error("evaluate: point dimension does not match variable table");
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
        total += t;
    }
    return total;
}

Poly Poly::embed(const VarTable& target) const {
    if (target == vars_) return *this;
    std::vector<std::size_t> map(vars_.size(), target.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (auto j = target.find(vars_.name(i))) map[i] = *j;
        else if (involves(i))
            throw VarTableMismatch("embed: variable '" + vars_.name(i) + "' missing from target table");
    }
    Poly r(target);
    for (const auto& [m, c] : terms_) {
        Monomial nm(target.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] > 0) nm[map[i]] = m[i];
        r.terms_.emplace(std::move(nm), c);
    }
    return r;
}

Poly Poly::primitive() const {
    if (terms_.empty()) return *this;
    mpz_class den = 1, num = 0;
    for (const auto& [m, c] : terms_) den = lcm(den, mpz_class(c.get_den()));
    for (const auto& [m, c] : terms_) num = gcd(num, mpz_class(c.get_num()));
    Rational scale(den, num);
    scale.canonicalize();
    if (leading_coefficient() < 0) scale = -scale;
    return *this * scale;
}

std::string render_rational(const Rational& c) {
    return c.get_str();
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool constant_part = gaquot::total_degree(m) == 0;
        bool wrote = false;
        if (mag != 1 || constant_part) {
            os << render_rational(mag);
            wrote = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (wrote) os << "*";
            os << vars_.name(i);
            if (m[i] > 1) os << "^" << m[i];
            wrote = true;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

namespace {

bool divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

std::optional<Poly> exact_divide(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw Error("exact_divide: division by zero polynomial");
    if (p.vars() != q.vars()) throw VarTableMismatch("exact_divide: variable tables differ");

    const VarTable& vars = p.vars();
    const Monomial& lq = q.leading_monomial();
    const Rational& cq = q.leading_coefficient();

    if (q.term_count() == 1) {
        Poly::TermMap out;
        for (const auto& [m, c] : p.terms()) {
            if (!divides(lq, m)) return std::nullopt;
            Monomial nm = m;
            for (std::size_t i = 0; i < nm.size(); ++i) nm[i] -= lq[i];
            out.emplace(std::move(nm), c / cq);
        }
        return Poly(vars, std::move(out));
    }

    // If q | p the grlex division algorithm never gets stuck: the leading
    // term of every remainder is a multiple of LT(q).
    Poly rem = p;
    Poly quot(vars);
    while (!rem.is_zero()) {
        const Monomial& lr = rem.leading_monomial();
        if (!divides(lq, lr)) return std::nullopt;
        Monomial shift = lr;
        for (std::size_t i = 0; i < shift.size(); ++i) shift[i] -= lq[i];
        Poly t = Poly::monomial(vars, shift, rem.leading_coefficient() / cq);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

}  // namespace gaquot
