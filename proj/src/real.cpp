#include "latpath/real.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace latpath {

SignPair parse_sign_pair(std::string_view token) {
    if (token.size() != 2 || (token[0] != '+' && token[0] != '-') ||
        (token[1] != '+' && token[1] != '-')) {
        throw SignParseError("bad sign pair '" + std::string(token) +
                             "' (expected two symbols from {+,-})");
    }
    SignPair s;
    if (token[0] == '-') s.bits |= 1;
    if (token[1] == '-') s.bits |= 2;
    return s;
}

std::string to_string(SignPair s) {
    std::string out;
    out += (s.bits & 1) ? '-' : '+';
    out += (s.bits & 2) ? '-' : '+';
    return out;
}

bool sign_equivalent(SignPair a, SignPair b, LatticePoint edge) {
    std::uint8_t diff = a.bits ^ b.bits;
    return diff == 0 || diff == parity_bits(edge);
}

SignPair canonical_sign(SignPair s, LatticePoint edge) {
    return SignPair{std::min<std::uint8_t>(s.bits, s.bits ^ parity_bits(edge))};
}

SignSequence SignSequence::uniform(std::size_t edges, SignPair s) {
    SignSequence seq;
    seq.signs.assign(edges, s);
    return seq;
}

std::string SignSequence::str() const {
    std::string out;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i > 0) out += ' ';
        out += to_string(signs[i]);
    }
    return out;
}

SignSequence parse_signs(std::string_view text) {
    SignSequence seq;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\n' &&
               text[j] != '\r') {
            ++j;
        }
        seq.signs.push_back(parse_sign_pair(text.substr(i, j - i)));
        i = j;
    }
    return seq;
}

TriangleParity triangle_parity(LatticePoint a, LatticePoint b, LatticePoint c) {
    std::uint8_t pu = parity_bits(b - a);
    std::uint8_t pv = parity_bits(c - b);
    std::uint8_t pw = static_cast<std::uint8_t>(pu ^ pv); // c - a mod 2
    if (pu == 0 && pv == 0) return TriangleParity::all_even;
    if (pu != 0 && pv != 0 && pw != 0) return TriangleParity::all_odd;
    if (pu == 0) return TriangleParity::even_incoming;
    if (pv == 0) return TriangleParity::even_outgoing;
    return TriangleParity::even_diagonal;
}

namespace {

bool class_contains(SignPair member, SignPair rep, std::uint8_t edge_parity) {
    return member.bits == rep.bits || member.bits == (rep.bits ^ edge_parity);
}

} // namespace

ACoefficient a_coefficient(LatticePoint u, LatticePoint v, SignPair sigma_k,
                           SignPair sigma_k1, AllEvenRule rule,
                           std::optional<SignPair> sigma_previous) {
    std::uint8_t pu = parity_bits(u);
    std::uint8_t pv = parity_bits(v);
    std::uint8_t pw = static_cast<std::uint8_t>(pu ^ pv);
    TriangleParity parity =
        pu == 0 && pv == 0 ? TriangleParity::all_even
        : pu != 0 && pv != 0 && pw != 0 ? TriangleParity::all_odd
        : pu == 0                       ? TriangleParity::even_incoming
        : pv == 0                       ? TriangleParity::even_outgoing
                                        : TriangleParity::even_diagonal;

    ACoefficient result;

    if (parity == TriangleParity::all_even) {
        bool zero;
        if (rule == AllEvenRule::literal_previous && sigma_previous.has_value()) {
            zero = sigma_previous->bits != sigma_k.bits;
        } else {
            zero = sigma_k != sigma_k1;
        }
        if (!zero && sigma_k == sigma_k1) {
            result.a = 4;
            result.sigma_prime = {sigma_k}; // classes are singletons here
        }
        return result;
    }

    // The remaining cases are settled by exhausting the four sign values
    // against the stated class conditions.
    auto common_with_pivot_classes = [&](SignPair candidate) {
        for (std::uint8_t e = 0; e < 4; ++e) {
            SignPair probe{e};
            if (class_contains(probe, sigma_k, pu) && class_contains(probe, sigma_k1, pv) &&
                class_contains(probe, candidate, pw)) {
                return true;
            }
        }
        return false;
    };
    auto collect = [&](bool want_common) {
        std::vector<SignPair> classes;
        for (std::uint8_t c = 0; c < 4; ++c) {
            SignPair candidate{c};
            if (common_with_pivot_classes(candidate) != want_common) continue;
            SignPair rep{std::min<std::uint8_t>(c, c ^ pw)};
            if (std::find(classes.begin(), classes.end(), rep) == classes.end()) {
                classes.push_back(rep);
            }
        }
        return classes;
    };

    if (parity == TriangleParity::all_odd) {
        // Distinct odd directions: the pivot-edge classes always meet in
        // exactly one element, and exactly one class of the merged edge
        // contains it. Picking that class keeps both published real counts
        // (12 nodal cubics, 217 genus-1 quartics) and the all-quadrant conic
        // checks; the avoiding class breaks the quartic count.
        result.a = 1;
        result.sigma_prime = collect(true);
        assert(result.sigma_prime.size() == 1);
        return result;
    }

    // Mixed parity: weight 2 when the pivot-edge classes meet.
    bool classes_meet = false;
    for (std::uint8_t e = 0; e < 4; ++e) {
        SignPair probe{e};
        if (class_contains(probe, sigma_k, pu) && class_contains(probe, sigma_k1, pv)) {
            classes_meet = true;
            break;
        }
    }
    if (!classes_meet) return result;

    result.a = 2;
    result.sigma_prime = collect(true);
    if (parity == TriangleParity::even_diagonal) {
        // Two singleton classes qualify; their values are summed with
        // coefficient one apiece, which agrees with a = 2.
        assert(result.sigma_prime.size() == 2);
        result.exceptional = true;
    } else {
        assert(result.sigma_prime.size() == 1);
    }
    return result;
}

std::int64_t triangle_interior_count(LatticePoint a, LatticePoint b, LatticePoint c) {
    auto lattice_length = [](LatticePoint v) { return std::gcd(std::abs(v.x), std::abs(v.y)); };
    std::int64_t doubled = triangle_double_area(a, b, c);
    std::int64_t boundary = lattice_length(b - a) + lattice_length(c - b) + lattice_length(a - c);
    return (doubled - boundary + 2) / 2; // Pick
}

int b_coefficient(LatticePoint a, LatticePoint b, LatticePoint c) {
    if (parity_bits(b - a) == 0 || parity_bits(c - b) == 0 || parity_bits(c - a) == 0) {
        return 0;
    }
    return triangle_interior_count(a, b, c) % 2 == 0 ? 1 : -1;
}

std::size_t RealMultiplicityEngine::SignedKeyHash::operator()(const SignedKey& key) const {
    std::uint64_t h = PathHash{}(key.path);
    for (std::uint8_t s : key.signs) {
        h ^= s;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

RealMultiplicityEngine::SignedKey RealMultiplicityEngine::make_key(
    const LatticePath& path, const std::vector<SignPair>& signs) const {
    SignedKey key;
    key.path = path;
    key.signs.resize(signs.size());
    for (std::size_t j = 0; j < signs.size(); ++j) {
        if (rule_ == AllEvenRule::literal_previous) {
            key.signs[j] = signs[j].bits;
        } else {
            key.signs[j] =
                canonical_sign(signs[j], path.points[j + 1] - path.points[j]).bits;
        }
    }
    return key;
}

void RealMultiplicityEngine::check_endpoints(const LatticePath& path) const {
    if (path.points.empty() || path.front() != ctx_->p || path.back() != ctx_->q) {
        throw ContextMismatch("path does not run between the context extrema " +
                              to_string(ctx_->p) + ".." + to_string(ctx_->q));
    }
}

Integer RealMultiplicityEngine::mu_real_side(const LatticePath& path, const SignSequence& signs,
                                             Side side) {
    check_endpoints(path);
    if (signs.size() != path.edge_count()) {
        throw SignLengthMismatch("sign sequence length " + std::to_string(signs.size()) +
                                 " does not match the path edge count " +
                                 std::to_string(path.edge_count()));
    }
    auto& memo = side == Side::plus ? mu_r_memo_plus_ : mu_r_memo_minus_;
    const LatticePath& alpha = ctx_->alpha(side == Side::plus);

    struct Frame {
        LatticePath path;
        std::vector<SignPair> signs;
        SignedKey key;
        bool expanded = false;
        SurgeryResult surgery;
        ACoefficient coeff;
        std::vector<SignedKey> dropped_keys;
        SignedKey reflected_key;
    };

    std::vector<Frame> stack;
    stack.push_back(Frame{path, signs.signs, make_key(path, signs.signs), false, {}, {}, {}, {}});

    while (!stack.empty()) {
        Frame& frame = stack.back();
        if (memo.contains(frame.key)) {
            stack.pop_back();
            continue;
        }
        if (!frame.expanded) {
            if (frame.path == alpha) {
                memo.emplace(std::move(frame.key), 1);
                stack.pop_back();
                continue;
            }
            auto pivot = find_pivot(frame.path, side);
            if (!pivot) {
                memo.emplace(std::move(frame.key), 0);
                stack.pop_back();
                continue;
            }
            frame.surgery = apply_surgery(frame.path, *pivot, ctx_->polygon);

            std::size_t k = pivot->k;
            SignPair sigma_k = frame.signs[k - 1];  // edge gamma(k-1) -> gamma(k)
            SignPair sigma_k1 = frame.signs[k];     // edge gamma(k) -> gamma(k+1)
            std::optional<SignPair> previous;
            if (k >= 2) previous = frame.signs[k - 2];
            frame.coeff = a_coefficient(pivot->apex - pivot->before, pivot->after - pivot->apex,
                                        sigma_k, sigma_k1, rule_, previous);

            // gamma'': same edges in the other order, signs swapped with them.
            std::vector<SignPair> swapped = frame.signs;
            std::swap(swapped[k - 1], swapped[k]);
            frame.reflected_key = make_key(frame.surgery.reflected, swapped);

            // gamma': the two pivot edges merge into one carrying sigma'.
            frame.dropped_keys.clear();
            for (SignPair choice : frame.coeff.sigma_prime) {
                std::vector<SignPair> merged;
                merged.reserve(frame.signs.size() - 1);
                merged.insert(merged.end(), frame.signs.begin(), frame.signs.begin() + (k - 1));
                merged.push_back(choice);
                merged.insert(merged.end(), frame.signs.begin() + (k + 1), frame.signs.end());
                frame.dropped_keys.push_back(make_key(frame.surgery.dropped, merged));
            }
            frame.expanded = true;

            struct Child {
                LatticePath path;
                std::vector<SignPair> signs;
                SignedKey key;
            };
            std::vector<Child> children;
            if (frame.surgery.reflected_inside && !memo.contains(frame.reflected_key)) {
                children.push_back(Child{frame.surgery.reflected, swapped, frame.reflected_key});
            }
            for (std::size_t i = 0; i < frame.dropped_keys.size(); ++i) {
                if (memo.contains(frame.dropped_keys[i])) continue;
                std::vector<SignPair> merged;
                merged.insert(merged.end(), frame.signs.begin(), frame.signs.begin() + (k - 1));
                merged.push_back(frame.coeff.sigma_prime[i]);
                merged.insert(merged.end(), frame.signs.begin() + (k + 1), frame.signs.end());
                children.push_back(Child{frame.surgery.dropped, std::move(merged),
                                         frame.dropped_keys[i]});
            }
            for (Child& child : children) {
                stack.push_back(Frame{std::move(child.path), std::move(child.signs),
                                      std::move(child.key), false, {}, {}, {}, {}});
            }
            continue;
        }
        Integer value = 0;
        for (const SignedKey& key : frame.dropped_keys) {
            value += (frame.coeff.exceptional ? Integer(1) : Integer(frame.coeff.a)) *
                     memo.at(key);
        }
        if (frame.surgery.reflected_inside) value += memo.at(frame.reflected_key);
        memo.emplace(std::move(frame.key), std::move(value));
        stack.pop_back();
    }
    return memo.at(make_key(path, signs.signs));
}

Integer RealMultiplicityEngine::nu_side(const LatticePath& path, Side side) {
    check_endpoints(path);
    auto& memo = side == Side::plus ? nu_memo_plus_ : nu_memo_minus_;
    const LatticePath& alpha = ctx_->alpha(side == Side::plus);

    struct Frame {
        LatticePath path;
        bool expanded = false;
        int b = 0;
        SurgeryResult surgery;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{path, false, 0, {}});

    while (!stack.empty()) {
        Frame& frame = stack.back();
        if (memo.contains(frame.path)) {
            stack.pop_back();
            continue;
        }
        if (!frame.expanded) {
            if (frame.path == alpha) {
                memo.emplace(std::move(frame.path), 1);
                stack.pop_back();
                continue;
            }
            auto pivot = find_pivot(frame.path, side);
            if (!pivot) {
                memo.emplace(std::move(frame.path), 0);
                stack.pop_back();
                continue;
            }
            frame.b = b_coefficient(pivot->before, pivot->apex, pivot->after);
            frame.surgery = apply_surgery(frame.path, *pivot, ctx_->polygon);
            frame.expanded = true;
            // Copy the children out: pushing invalidates `frame`.
            LatticePath dropped = frame.surgery.dropped;
            LatticePath reflected = frame.surgery.reflected;
            bool want_dropped = frame.b != 0 && !memo.contains(dropped);
            bool want_reflected = frame.surgery.reflected_inside && !memo.contains(reflected);
            if (want_dropped) stack.push_back(Frame{std::move(dropped), false, 0, {}});
            if (want_reflected) stack.push_back(Frame{std::move(reflected), false, 0, {}});
            continue;
        }
        Integer value = 0;
        if (frame.b != 0) value += Integer(frame.b) * memo.at(frame.surgery.dropped);
        if (frame.surgery.reflected_inside) value += memo.at(frame.surgery.reflected);
        memo.emplace(std::move(frame.path), std::move(value));
        stack.pop_back();
    }
    return memo.at(path);
}

RealMultiplicityRecord RealMultiplicityEngine::evaluate(const LatticePath& path,
                                                        const SignSequence& signs) {
    RealMultiplicityRecord rec = evaluate_nu(path);
    rec.mu_r_plus = mu_real_side(path, signs, Side::plus);
    rec.mu_r_minus = mu_real_side(path, signs, Side::minus);
    rec.mu_r = rec.mu_r_plus * rec.mu_r_minus;
    return rec;
}

RealMultiplicityRecord RealMultiplicityEngine::evaluate_nu(const LatticePath& path) {
    RealMultiplicityRecord rec;
    rec.nu_plus = nu_side(path, Side::plus);
    rec.nu_minus = nu_side(path, Side::minus);
    rec.nu = rec.nu_plus * rec.nu_minus;
    return rec;
}

} // namespace latpath
