#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "latpath/integer.hpp"
#include "latpath/path.hpp"

namespace latpath {

// The quadrant of a real point, an element of Z_2 + Z_2. Bit 0 is set when
// the first coordinate is negative, bit 1 for the second, so (+,+) is 0.
struct SignPair {
    std::uint8_t bits = 0;

    bool operator==(const SignPair&) const = default;
};

SignPair parse_sign_pair(std::string_view token); // "++", "+-", "-+", "--"
std::string to_string(SignPair s);

// Residue of a lattice vector mod 2, packed like SignPair bits. A side of a
// triangle is "even" exactly when this is zero (equivalently, its lattice
// length is even).
constexpr std::uint8_t parity_bits(LatticePoint v) {
    return static_cast<std::uint8_t>((v.x & 1) | ((v.y & 1) << 1));
}

// Signs are equivalent across an edge when they differ by the edge mod 2.
bool sign_equivalent(SignPair a, SignPair b, LatticePoint edge);

// Smallest member of the equivalence class; memo keys use this.
SignPair canonical_sign(SignPair s, LatticePoint edge);

// One sign pair per path edge; signs[j] belongs to the edge gamma[j, j+1].
struct SignSequence {
    std::vector<SignPair> signs;

    static SignSequence uniform(std::size_t edges, SignPair s);
    std::size_t size() const { return signs.size(); }
    std::string str() const;

    bool operator==(const SignSequence&) const = default;
};

// Whitespace-separated pairs over {+,-}, e.g. "++ +- -+".
SignSequence parse_signs(std::string_view text);

enum class TriangleParity {
    all_odd,
    all_even,
    even_incoming, // the even side is gamma(k) - gamma(k-1)
    even_outgoing, // the even side is gamma(k+1) - gamma(k)
    even_diagonal, // the even side is gamma(k+1) - gamma(k-1): the exceptional case
};

// Classifies the pivot triangle (gamma(k-1), gamma(k), gamma(k+1)). At most
// one side can be even: the sides sum to zero mod 2.
TriangleParity triangle_parity(LatticePoint a, LatticePoint b, LatticePoint c);

// The text defines the all-even zero test on the two edges meeting the
// pivot; taken literally it reads the previous edge's sign instead. The
// engine carries both so the literal reading stays evaluable.
enum class AllEvenRule { pivot_edges, literal_previous };

struct ACoefficient {
    int a = 0;                          // 0, 1, 2 or 4
    std::vector<SignPair> sigma_prime;  // canonical sign classes for the new edge
    bool exceptional = false;           // even diagonal: sum the two gamma' values
};

// The real weight of a pivot triangle with incoming side u, outgoing side v,
// and the signs attached to those edges:
//   all sides odd   a = 1
//   all sides even  a = 4 when the two signs agree, else 0
//   one even side   a = 2 when the two sign classes meet, else 0
// In every nonzero case the class of the merged-edge sign sigma' is the one
// sharing an element with both pivot-edge classes; when the even side is the
// diagonal, two singleton classes qualify and the caller sums the gamma'
// values for both (which matches a = 2). sigma_prime is empty iff the
// gamma' term drops out.
ACoefficient a_coefficient(LatticePoint u, LatticePoint v, SignPair sigma_k,
                           SignPair sigma_k1,
                           AllEvenRule rule = AllEvenRule::pivot_edges,
                           std::optional<SignPair> sigma_previous = {});

std::int64_t triangle_interior_count(LatticePoint a, LatticePoint b, LatticePoint c);

// 0 when a side of the triangle is even, otherwise -1 to the number of its
// interior lattice points.
int b_coefficient(LatticePoint a, LatticePoint b, LatticePoint c);

struct RealMultiplicityRecord {
    Integer mu_r_plus;
    Integer mu_r_minus;
    Integer mu_r; // product
    Integer nu_plus;
    Integer nu_minus;
    Integer nu; // product, may be negative

    bool operator==(const RealMultiplicityRecord&) const = default;
};

// The signed analogues of the complex recursion:
//
//   mu_r(gamma) = a(T) mu_r(gamma') + mu_r(gamma'')   (sign-dependent)
//   nu(gamma)   = b(T) nu(gamma')   + nu(gamma'')     (sign-independent)
//
// with the same pivots, surgeries and base cases. The sign sequence of
// gamma'' swaps the two pivot-edge signs; gamma' gets the class chosen by
// a_coefficient. mu_r only depends on the sign classes, so its memo key
// canonicalizes each sign against its edge (raw signs under the literal
// all-even rule, whose zero test is not class-invariant).
class RealMultiplicityEngine {
public:
    explicit RealMultiplicityEngine(const PathContext& ctx,
                                    AllEvenRule rule = AllEvenRule::pivot_edges)
        : ctx_(&ctx), rule_(rule) {}

    Integer mu_real_side(const LatticePath& path, const SignSequence& signs, Side side);
    Integer nu_side(const LatticePath& path, Side side);
    RealMultiplicityRecord evaluate(const LatticePath& path, const SignSequence& signs);
    RealMultiplicityRecord evaluate_nu(const LatticePath& path);

private:
    struct SignedKey {
        LatticePath path;
        std::vector<std::uint8_t> signs;
        bool operator==(const SignedKey&) const = default;
    };
    struct SignedKeyHash {
        std::size_t operator()(const SignedKey& key) const;
    };
    using SignedMemo = std::unordered_map<SignedKey, Integer, SignedKeyHash>;
    using PlainMemo = std::unordered_map<LatticePath, Integer, PathHash>;

    SignedKey make_key(const LatticePath& path, const std::vector<SignPair>& signs) const;
    void check_endpoints(const LatticePath& path) const;

    const PathContext* ctx_;
    AllEvenRule rule_;
    SignedMemo mu_r_memo_plus_, mu_r_memo_minus_;
    PlainMemo nu_memo_plus_, nu_memo_minus_;
};

} // namespace latpath
