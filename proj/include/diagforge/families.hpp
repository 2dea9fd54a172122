#pragma once

// Registry of the surface constructions: rational parameters in, diagonal
// surface + fiber curve + seed point out, with pullbacks of scalar multiples
// of the seed producing unlimited exact rational points.

#include "diagforge/surface.hpp"
#include "diagforge/weierstrass.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>

namespace diagforge {

struct FamilySpec {
    std::string id;
    std::vector<std::string> params;     // parameter names, documented order
    std::string admissibility;           // human-readable predicate
    std::map<std::string, Rat> sample;   // documented sample parameters
    std::string note;                    // verbatim annotation (never computed)
};

struct UnknownFamilyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InadmissibleParameterError : std::invalid_argument {
    InadmissibleParameterError(std::string param_, std::string predicate_)
        : std::invalid_argument("inadmissible parameter " + param_ + ": requires " + predicate_),
          param(std::move(param_)),
          predicate(std::move(predicate_)) {}
    std::string param, predicate;
};

struct GeneratedPoint {
    long m = 0;
    bool indeterminate = false;  // m*seed landed on the pullback's exceptional locus
    ProjPoint point{};           // class representative; meaningful when !indeterminate
};

class SurfaceInstance {
public:
    const std::string& family() const { return id_; }
    const DiagonalSurface& surface() const { return *surf_; }

    // Short Weierstrass fiber model and the seed's image on it; null for the
    // closed-form families that carry no curve.
    const WeierstrassCurve* fiber_curve() const { return curve_.get(); }
    const ECPoint* seed() const { return seed_ ? &*seed_ : nullptr; }

    GeneratedPoint point_at(long m) const;
    // One point per multiple, emitted in ascending m. Multiples must be nonzero.
    std::vector<GeneratedPoint> generate_points(std::vector<long> multiples) const;

private:
    friend SurfaceInstance instantiate(const std::string&, const std::map<std::string, Rat>&);
    friend struct FamilyBuilder;
    std::string id_;
    std::optional<DiagonalSurface> surf_;
    std::function<std::array<Rat, 4>(long)> gen_;  // throws IndeterminateError
    std::shared_ptr<const WeierstrassCurve> curve_;
    std::optional<ECPoint> seed_;
};

// Stable, documented ids; see README for the catalogue.
std::vector<FamilySpec> list_families();

// Errors: UnknownFamilyError; InadmissibleParameterError (names the violated
// predicate); std::domain_error on degenerate specializations.
SurfaceInstance instantiate(const std::string& id, const std::map<std::string, Rat>& params);

// Closed-form solution on a x^4 - a y^4 + c z^4 + d w^4 = 0; requires 4a^2cd
// to be the fourth power of a rational.
ProjPoint carmichael_solution(const Rat& a, const Rat& c, const Rat& d, const Rat& s,
                              const Rat& t);

// Given binary quadratic forms phi solving X1^2 + 3 X2^2 = k X3^2, returns
// forms (phi1-phi2, 2 phi2, phi1+phi2, phi3) solving x^4+y^4+z^4 = 2k^2 w^4.
std::array<MPoly, 4> conic_2k2_solution(const Rat& k, const std::array<MPoly, 3>& phi);

// L members of the equal-value chain 2X^6 - 2Y^6 + Z^6 = K(t0)^3 W^6 with
// K(t) = t^4 + 6t^3 + 3t^2 + 2t - 1.
std::vector<ProjPoint> sixth_power_chain(const Rat& t0, long L);

}  // namespace diagforge
