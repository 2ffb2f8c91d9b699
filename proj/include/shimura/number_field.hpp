#pragma once

#include <memory>
#include <string>
#include <vector>

#include "shimura/multipoly.hpp"
#include "shimura/real_roots.hpp"
#include "shimura/upoly.hpp"

namespace shimura {

/// Q[x]/(m) for a monic integer irreducible m, with its real roots isolated.
class NumberField {
public:
    /// Validates m (monic, integer coefficients, squarefree, no rational root
    /// when deg m <= 3) and isolates its real roots.
    static std::shared_ptr<const NumberField> create(const UPoly& minimal_polynomial,
                                                     std::string generator_name = "nu");

    const UPoly& minimal_polynomial() const noexcept { return m_; }
    const std::string& generator_name() const noexcept { return name_; }
    int degree() const noexcept { return m_.degree(); }
    const std::vector<Interval>& real_embeddings() const noexcept { return embeddings_; }
    const std::vector<UPoly>& sturm() const noexcept { return sturm_; }
    bool is_totally_real() const noexcept { return static_cast<int>(embeddings_.size()) == degree(); }

    /// Decimal approximation of the generator at an embedding.
    double root_value(std::size_t index) const;

private:
    NumberField() = default;
    UPoly m_;
    std::string name_;
    std::vector<Interval> embeddings_;
    std::vector<UPoly> sturm_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field, stored as the reduced polynomial in the generator.
class NumberFieldElem {
public:
    NumberFieldElem() = default;
    NumberFieldElem(FieldPtr field, const Rational& c);
    NumberFieldElem(FieldPtr field, const UPoly& p);
    static NumberFieldElem generator(FieldPtr field);

    const FieldPtr& field() const noexcept { return field_; }
    /// Coordinates on 1, nu, ..., nu^(d-1).
    std::vector<Rational> coords() const;
    const UPoly& poly() const noexcept { return p_; }

    bool is_zero() const noexcept { return p_.is_zero(); }
    bool is_rational() const noexcept { return p_.degree() <= 0; }
    /// Value if rational; throws otherwise.
    Rational rational_value() const;

    NumberFieldElem inverse() const;
    NumberFieldElem pow(long e) const;

    NumberFieldElem& operator+=(const NumberFieldElem& o);
    NumberFieldElem& operator-=(const NumberFieldElem& o);
    NumberFieldElem& operator*=(const NumberFieldElem& o);
    friend NumberFieldElem operator+(NumberFieldElem a, const NumberFieldElem& b) { return a += b; }
    friend NumberFieldElem operator-(NumberFieldElem a, const NumberFieldElem& b) { return a -= b; }
    friend NumberFieldElem operator*(NumberFieldElem a, const NumberFieldElem& b) { return a *= b; }
    friend NumberFieldElem operator*(NumberFieldElem a, const Rational& c);
    friend NumberFieldElem operator*(const Rational& c, NumberFieldElem a) { return std::move(a) * c; }
    friend NumberFieldElem operator/(const NumberFieldElem& a, const NumberFieldElem& b) { return a * b.inverse(); }
    friend NumberFieldElem operator-(const NumberFieldElem& a);
    friend bool operator==(const NumberFieldElem& a, const NumberFieldElem& b);

    std::string to_string() const;

private:
    void check_same(const NumberFieldElem& o) const;
    FieldPtr field_;
    UPoly p_;
};

/// Exact sign of e at the real embedding with the given index.
int sign_at_embedding(const NumberFieldElem& e, std::size_t embedding_index);

/// Rational approximation of e at an embedding, within 10^-digits.
Rational approximate(const NumberFieldElem& e, std::size_t embedding_index, unsigned digits);

/// Monic minimal polynomial of 2cos(2 pi / n), n >= 3, returned in variable x.
MultiPoly minpoly_2cos(int n);
UPoly minpoly_2cos_upoly(int n);

} // namespace shimura
