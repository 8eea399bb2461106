#ifndef GVX_LIEALG_HPP
#define GVX_LIEALG_HPP

#include "gvx/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gvx::liealg {

using exactlin::Rational;
using exactlin::Scalar;

/// Closed index window [lo, hi].
struct Window {
    int lo;
    int hi;

    bool contains(int k) const { return lo <= k && k <= hi; }

    /// Window wide enough to hold every bracket of two indices from this one.
    /// Used as the buffer zone for truncated cochain computations.
    Window dilated() const;

    friend bool operator==(const Window&, const Window&) = default;
};

enum class AlgebraKind { Line, Circle };

/// Line:   e_k = x^{k+1} d/dx for k >= -1, over Q.
/// Circle: L_n = e^{int} d/dt for n in Z, over Q(i).
struct AlgebraDescriptor {
    AlgebraKind kind;

    bool valid_index(int k) const { return kind == AlgebraKind::Circle || k >= -1; }
    int min_index() const;
    /// Clamps a window to valid basis indices (line: lo >= -1).
    Window clamp(const Window& w) const;
    std::string basis_name(int k) const;  // "e[k]" / "L[n]"

    friend bool operator==(const AlgebraDescriptor&, const AlgebraDescriptor&) = default;
};

inline AlgebraDescriptor line_algebra() { return {AlgebraKind::Line}; }
inline AlgebraDescriptor circle_algebra() { return {AlgebraKind::Circle}; }

struct BracketTerm {
    Scalar coeff;
    int index;
};

/// [e_k, e_m] = (m-k) e_{k+m};  [L_k, L_m] = i(m-k) L_{k+m}.
BracketTerm bracket(const AlgebraDescriptor& alg, int k, int m);

/// Basis vector of a density module: m_p / mu_n by index, or the augmentation
/// vector tau (circle F_0 on the universal cover, representing the function t).
struct BasisKey {
    int index = 0;
    bool tau = false;

    static BasisKey at(int i) { return {i, false}; }
    static BasisKey tau_key() { return {0, true}; }

    friend bool operator==(const BasisKey&, const BasisKey&) = default;
    friend bool operator<(const BasisKey& a, const BasisKey& b) {
        if (a.tau != b.tau) return !a.tau;  // plain basis vectors sort before tau
        return a.index < b.index;
    }
};

/// F_lambda over the chosen algebra.
/// Line basis: m_p = x^p (dx)^lambda, p >= 0.  Circle basis: mu_n = e^{int}(dt)^lambda.
/// augmented is only meaningful for circle lambda=0 and adds tau.
struct DensityModule {
    AlgebraDescriptor alg;
    Rational lambda;
    bool augmented = false;

    bool valid_key(const BasisKey& k) const;
    /// grade(m_p) = p + lambda, grade(mu_n) = n, grade(tau) = 0.
    Rational grade(const BasisKey& k) const;
    std::string basis_name(const BasisKey& k) const;

    friend bool operator==(const DensityModule&, const DensityModule&) = default;
};

DensityModule f_lambda(const AlgebraDescriptor& alg, const Rational& lambda, bool augmented = false);

/// Finite scalar combination of module basis vectors.
class ModuleElement {
public:
    ModuleElement() = default;

    static ModuleElement zero() { return {}; }
    static ModuleElement basis(const BasisKey& k, Scalar c = Scalar(1));
    static ModuleElement basis(int index, Scalar c = Scalar(1)) { return basis(BasisKey::at(index), std::move(c)); }
    static ModuleElement tau(Scalar c = Scalar(1)) { return basis(BasisKey::tau_key(), std::move(c)); }

    bool is_zero() const { return coef_.empty(); }
    const std::map<BasisKey, Scalar>& terms() const { return coef_; }
    Scalar coeff(const BasisKey& k) const;

    void add(const BasisKey& k, const Scalar& c);
    ModuleElement& operator+=(const ModuleElement& o);
    ModuleElement& operator-=(const ModuleElement& o);
    ModuleElement& operator*=(const Scalar& c);

    friend ModuleElement operator+(ModuleElement a, const ModuleElement& b) { return a += b; }
    friend ModuleElement operator-(ModuleElement a, const ModuleElement& b) { return a -= b; }
    friend ModuleElement operator*(const Scalar& c, ModuleElement v) { return v *= c; }
    friend bool operator==(const ModuleElement&, const ModuleElement&) = default;

    std::string str(const DensityModule& mod) const;

private:
    std::map<BasisKey, Scalar> coef_;
};

/// Lie-derivative action of the k-th algebra basis vector.
///   line:   L_{e_k} m_p  = (p + lambda(k+1)) m_{p+k}
///   circle: L_{L_k} mu_n = i(n + lambda k) mu_{n+k},  L_{L_k} tau = mu_k  (lambda=0)
/// Throws if a nonzero coefficient would land below the line module range.
ModuleElement act(const DensityModule& mod, int k, const ModuleElement& v);

/// Same action with the lambda of the formula overridden (negative-control hook:
/// e.g. the lambda=1 coefficient rule applied to F_0 vectors).
ModuleElement act_as_lambda(const DensityModule& mod, const Rational& lambda, int k, const ModuleElement& v);

/// Gelfand-Fuks 2-cocycle valued in F_1:
///   line:   c(e_k, e_m) = (k+1)(m+1)(m-k) m_{k+m-1}
///   circle: c(L_k, L_m) = i km(k-m) mu_{k+m}
ModuleElement gf_two_cocycle(const AlgebraDescriptor& alg, int k, int m);

/// Twisting 2-cochain for the semidirect product F_1 x| g.
/// BracketTransport is the negative control c~(e_k,e_m) = (m-k) m_{k+m}
/// (boundary-truncated on the line; the truncation is what breaks the
/// cocycle identity, witnessed at (e_{-1}, e_0, e_1)).
enum class Twist { GelfandFuks, BracketTransport };

struct SemidirectAlgebra {
    AlgebraDescriptor alg;
    Twist twist = Twist::GelfandFuks;

    DensityModule value_module() const { return {alg, Rational(1), false}; }
};

ModuleElement twist_value(const SemidirectAlgebra& sd, int k, int m);

/// Element (a, f) with a in F_1 and f in the base algebra.
struct SemidirectElement {
    ModuleElement density;
    std::map<int, Scalar> field;

    static SemidirectElement from_field(int k, Scalar c = Scalar(1));
    static SemidirectElement from_density(ModuleElement a);

    bool is_zero() const { return density.is_zero() && field.empty(); }
    SemidirectElement& operator+=(const SemidirectElement& o);
    SemidirectElement& operator*=(const Scalar& c);
    friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;

    std::string str(const SemidirectAlgebra& sd) const;
};

/// [(a,f),(b,g)] = (L_f b - L_g a + c(f,g), [f,g]).
SemidirectElement semidirect_bracket(const SemidirectAlgebra& sd, const SemidirectElement& x,
                                     const SemidirectElement& y);

/// d: F_0 -> F_1.  line: m_p -> p m_{p-1};  circle: mu_n -> i n mu_n, tau -> mu_0.
ModuleElement de_rham(const AlgebraDescriptor& alg, const ModuleElement& v);

/// Canonical primitive (zero integration constant) of an F_1 element.
/// Circle mu_0 component needs the augmented module; otherwise the
/// obstruction key is reported instead of a value.
struct PrimitiveResult {
    std::optional<ModuleElement> value;
    std::optional<BasisKey> obstruction;

    bool ok() const { return value.has_value(); }
};

PrimitiveResult primitive(const AlgebraDescriptor& alg, bool augmented, const ModuleElement& w);

struct JacobiViolation {
    std::string x, y, z;
    std::string residual;
};

struct JacobiReport {
    bool pass = true;
    long triples_checked = 0;
    std::vector<JacobiViolation> violations;
};

/// Checks [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 on all basis triples with
/// indices in the window.
JacobiReport jacobi_check(const AlgebraDescriptor& alg, const Window& win);

/// Semidirect variant: basis triples drawn from both the F_1 slot and the
/// algebra slot. Equivalent to the 2-cocycle condition for the twist.
JacobiReport jacobi_check(const SemidirectAlgebra& sd, const Window& win);

} // namespace gvx::liealg

#endif
