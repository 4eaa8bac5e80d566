#pragma once

#include <vector>

#include "paulivol/exact.hpp"

namespace paulivol::membership {

enum class PointKind { Slater, Interior };

/// Extreme point of P_{d,N}: `ones` leading entries equal to 1, `zeros`
/// trailing zeros, and a uniform fill (N-ones)/(d-ones-zeros) in between.
/// The Slater point is the degenerate case ones = N, zeros = d - N.
struct ExtremePoint {
    unsigned d = 0;
    unsigned n = 0;
    unsigned ones = 0;
    unsigned zeros = 0;
    PointKind kind = PointKind::Interior;

    static ExtremePoint slater(unsigned d, unsigned n);
    static ExtremePoint interior(unsigned d, unsigned n, unsigned ones, unsigned zeros);

    /// Uniform fill value; requires kind == Interior.
    Rational fill() const;
    std::vector<Rational> coordinates() const;
};

enum class MembershipReason { Slater, LmeExists, LmeAbsent };

struct MembershipVerdict {
    bool in_f = false;
    MembershipReason reason = MembershipReason::LmeAbsent;
};

/// All 1 + N(d-N) extreme points of P_{d,N} (Slater first, then (i,j) in
/// lexicographic order).
std::vector<ExtremePoint> pauli_extreme_points(unsigned d, unsigned n);

/// The d extreme points of B_{d,N}: (N/k, ..., N/k, 0, ..., 0) for k = 1..d.
std::vector<std::vector<Rational>> bose_extreme_points(unsigned d, const Rational& n);

/// Existence of locally maximally entangled N-fermion states on C^d, i.e.
/// states whose 1-body reduced density matrix is (N/d) * identity.
/// False exactly for (d>=2, N=1), (d odd, N=2), (d odd, N=d-2),
/// (d>=2, N=d-1).
bool lme_exists(unsigned d, unsigned n);

/// Whether an extreme point of P_{d,N} lies in the fermionic polytope
/// F_{d,N}: the ones split off as a Slater determinant and the zeros drop
/// out, reducing to LME existence in the uniform block.
MembershipVerdict classify(const ExtremePoint& p);

/// t = (N-m+1)/(N-m+9), the cap level at which A_{d,N,m,t} is certified
/// inside F_{d,N}. Requires 1 <= m <= N-7.
Rational cap_threshold(unsigned n, unsigned m);

/// Extreme points of P_{d,N} contained in A_{d,N,m,t}: exactly the interior
/// points with ones <= m-1 whose fill is <= t. Requires 8 <= N <= d/2,
/// m <= N-7 and t = cap_threshold(N, m).
std::vector<ExtremePoint> extreme_points_in_cap(unsigned d, unsigned n, unsigned m,
                                                const Rational& t);

/// One of the four explicit interpolation vectors lying in F_{d,N} on the
/// segment from extreme point (i,j) toward (target_ones, target_zeros).
struct InterpolationPoint {
    std::vector<Rational> coords;
    unsigned target_ones = 0;
    unsigned target_zeros = 0;
};

/// The four interpolation vectors for extreme point (i,j); the first family
/// is the one treated in detail, families 2-4 share its structure with
/// shifted block sizes. Requires 8 <= N <= d/2, i <= N-8, j <= d-N-8.
std::vector<InterpolationPoint> interpolation_points(unsigned d, unsigned n, unsigned i,
                                                     unsigned j);

/// Hypotheses under which A_{d,N,m,cap_threshold(N,m)} is inside F_{d,N}:
/// 8 <= N <= d/2 and 1 <= m <= N-7.
bool cap_certificate(unsigned d, unsigned n, unsigned m);

/// Index of the wedge-power representation of SL(d): (1/2d) C(d-2, N-1).
/// Requires d >= 3 and 1 <= N <= d-1.
Rational representation_index(unsigned d, unsigned n);

/// Dimension of the LME moduli space (states modulo SU(d)).
struct DimResult {
    enum class Kind { Empty, Point, ExistsOnly, Value };
    Kind kind = Kind::Empty;
    Integer value;  // set only for Kind::Value: C(d,N) - d^2

    bool operator==(const DimResult& o) const { return kind == o.kind && value == o.value; }
};

DimResult lme_moduli_dimension(unsigned d, unsigned n);

}  // namespace paulivol::membership
