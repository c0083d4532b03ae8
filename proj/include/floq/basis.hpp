#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "floq/errors.hpp"

namespace floq {

// Site Hilbert space: qubit ⊗ qudit, dimension 2q. The qubit carries the
// conserved charge (number of ↑), the qudit is unconstrained.
struct SiteSpace {
    int q = 1;
    int local_dim() const { return 2 * q; }
};

// Chain layout for brickwork circuits. L sites on a ring, range-r gates,
// Floquet period T. L mod r = 0 is required so the r staggered sub-layers
// tile the ring; L ≥ 2r keeps windows from self-overlapping.
struct ChainGeometry {
    int L = 0;
    int r = 2;
    int T = 1;

    int slots_per_sublayer() const { return L / r; }
    void validate() const;
};

std::uint64_t pow_u64(std::uint64_t base, int exp);
std::uint64_t binomial(int n, int k);

// Global basis-state encoding (fixed convention, also in the file-format
// docs): index = spin_word · q^L + qudit_word, with spin bit j = 1 meaning
// site j is ↑, and qudit_word = Σ_j digit_j q^j. For q = 1 the index is just
// the L-bit spin word.
struct BasisCodec {
    int L = 0;
    int q = 1;
    std::uint64_t qpowL = 1;

    BasisCodec() = default;
    BasisCodec(int L_, int q_);

    std::uint64_t dim() const { return (std::uint64_t{1} << L) * qpowL; }
    std::uint64_t encode(std::uint64_t spin_bits, std::uint64_t qudit_word) const {
        return spin_bits * qpowL + qudit_word;
    }
    std::uint64_t spin_word(std::uint64_t g) const { return g / qpowL; }
    std::uint64_t qudit_word(std::uint64_t g) const { return g % qpowL; }
};

// Decoded form of a basis state; the simulator works with raw indices, this
// is the human-readable view.
struct BasisState {
    std::uint64_t spin_bits = 0;
    std::vector<int> qudit_digits; // one digit per site; empty for q = 1
};

BasisState decode_state(std::uint64_t index, int L, int q);
std::uint64_t encode_state(const BasisState& s, int L, int q);

/// Number of ↑ qubits, i.e. (Σ_j Z_j + L)/2.
inline int total_charge(std::uint64_t spin_bits) {
    return std::popcount(spin_bits);
}

/// Number of ↑ qubits within the periodic window [start, start+r).
inline int local_charge(std::uint64_t spin_bits, int start, int r, int L) {
    int n = 0;
    for (int k = 0; k < r; ++k)
        n += static_cast<int>((spin_bits >> ((start + k) % L)) & 1u);
    return n;
}

// Fixed-charge sector of the chain. States are stored in ascending global
// index (the canonical ordering used for all reported spectra and vectors);
// index_of inverts the enumeration.
class ChargeSector {
public:
    ChargeSector(int L, int q, int n_up);

    int L() const { return codec_.L; }
    int q() const { return codec_.q; }
    int n_up() const { return n_up_; }
    const BasisCodec& codec() const { return codec_; }

    std::size_t dim() const { return states_.size(); }
    std::uint64_t state(std::size_t k) const { return states_[k]; }
    const std::vector<std::uint64_t>& states() const { return states_; }

    /// Sector position of a global index, or -1 if not a member.
    std::int64_t index_of(std::uint64_t global_index) const;

private:
    BasisCodec codec_;
    int n_up_;
    std::vector<std::uint64_t> states_;
    std::vector<std::int32_t> dense_inverse_; // used when (2q)^L is small
    std::unordered_map<std::uint64_t, std::int32_t> sparse_inverse_;
};

ChargeSector enumerate_sector(int L, int q, int n_up);
std::shared_ptr<const ChargeSector> make_sector(int L, int q, int n_up);

} // namespace floq
