#pragma once

#include "surfsym/solver.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace surfsym {

enum class SymKind { Axial, Planar, Central };
std::string kind_name(SymKind k);

// Exact rational value or a certified rational enclosure.
struct Scalar {
    bool exact = true;
    Rat value;      // when exact
    Rat lo, hi;     // when not
    std::string str(int digits) const;
};
Scalar exact_scalar(const Rat& v);
using SVec3 = std::array<Scalar, 3>;

// Fixed-point set of an involution of space: a center, an axis or a mirror
// plane. Directions and normals are primitive-integer normalized when exact.
struct SymmetryElement {
    enum class Type { Point, Line, Plane };
    Type type;
    SVec3 a;        // Point: the point; Line: base point; Plane: normal
    SVec3 d;        // Line: direction
    Scalar offset;  // Plane: n . x = offset
};

// Fixed-point set of the parameter-plane involution phi.
struct FixedLocus {
    enum class Type { Point, Line };
    Type type;
    Rat t0, s0;              // point
    Rat pt, ps, dt, ds;      // line (pt,ps) + w*(dt,ds)
};

struct Involution {
    SymKind kind;
    CaseId case_id;
    bool exact = true;
    // exact data (valid when exact)
    std::array<std::array<Rat, 3>, 3> Q{};
    std::array<Rat, 3> b{};
    std::array<Rat, 4> phiA{};  // a, b, c, d
    std::array<Rat, 2> phiC{};
    // always present; algebraic data is evaluated from these on demand
    std::shared_ptr<const CandidateFrame> frame;
    Root2D root;
    SymmetryElement element;
};

// det Q = +1 -> Axial; det Q = -1 and det(Q - I) != 0 -> Central, else Planar.
SymKind classify(const std::array<std::array<Rat, 3>, 3>& Q);

// Solves (A - I) tau = -c exactly.
FixedLocus fixed_locus(const std::array<Rat, 4>& A, const std::array<Rat, 2>& c);

// Substitutes a certified root into a frame, verifies the involution laws and
// the full coefficientwise identity, classifies and computes the element.
// Throws VerificationFailed when any exact check fails.
Involution instantiate(std::shared_ptr<const CandidateFrame> frame, const Root2D& root,
                       const Parametrization& P, int digits);

// Certified enclosure (or exact value) of a rational function at a root.
Scalar scalar_at(const RatFn& f, const Root2D& root, int digits);

struct CaseOutcome {
    CaseId id;
    enum class Kind { Empty, Finite, PositiveDimensional, Failed } kind;
    int roots = 0;
    int involutions = 0;
    std::string note;
    double millis = 0.0;
};

struct RevolutionInfo {
    CaseId witness_case;
    MPoly witness;          // square-free curve in the unknowns (u, v)
    bool axis_known = false;
    SymmetryElement axis;   // Line, when known
};

struct SymmetryReport {
    Parametrization surface;   // the prepared parametrization that was analyzed
    unsigned seed = 0;
    int digits = 12;
    std::vector<Involution> involutions;
    std::optional<RevolutionInfo> revolution;
    std::vector<CaseOutcome> outcomes;
};

struct AnalyzeOptions {
    unsigned seed = 0;
    int digits = 12;
    enum class Only { All, Direct, Opposite } only = Only::All;
    std::optional<CaseId> single_case;
};

// A positive-dimensional family found in one case: the witness curve plus
// what is needed to instantiate sample members (axis recovery).
struct WitnessFamily {
    CaseId id;
    MPoly witness;
    std::shared_ptr<const CandidateFrame> frame;
    std::vector<MPoly> side_conditions;
};

// Deduplicates by exact (Q, b), enforces the uniqueness of a symmetry center
// (CentralNotUnique otherwise), orders deterministically and recovers the
// revolution axis when a positive-dimensional family was found.
SymmetryReport aggregate(const Parametrization& P, const AnalyzeOptions& opt,
                         std::vector<CaseOutcome> outcomes,
                         std::vector<Involution> involutions,
                         const std::vector<WitnessFamily>& witnesses);

// Full pipeline: rejects planes (PlaneInput) and degenerate inputs
// (DegenerateSurface), prepares the parametrization, runs the twelve case
// searches and aggregates the report.
SymmetryReport analyze_surface(const Parametrization& raw, const AnalyzeOptions& opt);

} // namespace surfsym
