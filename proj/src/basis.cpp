#include "floq/basis.hpp"

#include <string>

namespace floq {

void ChainGeometry::validate() const {
    if (L <= 0 || r < 2 || T < 1)
        throw ConfigError("geometry: need L > 0, r >= 2, T >= 1 (got L=" + std::to_string(L) +
                          ", r=" + std::to_string(r) + ", T=" + std::to_string(T) + ")");
    if (L % r != 0)
        throw ConfigError("geometry: L mod r must be 0 so the staggered sub-layers tile the ring "
                          "(got L=" + std::to_string(L) + ", r=" + std::to_string(r) + ")");
    if (L < 2 * r)
        throw ConfigError("geometry: need L >= 2r (got L=" + std::to_string(L) +
                          ", r=" + std::to_string(r) + ")");
    if (L > 62)
        throw ConfigError("geometry: L > 62 exceeds the 64-bit spin-word encoding");
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t out = 1;
    for (int i = 1; i <= k; ++i) {
        out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return out;
}

BasisCodec::BasisCodec(int L_, int q_) : L(L_), q(q_), qpowL(pow_u64(q_, L_)) {
    if (L < 1 || L > 62) throw ConfigError("codec: L out of range");
    if (q < 1) throw ConfigError("codec: qudit dimension q must be >= 1");
}

BasisState decode_state(std::uint64_t index, int L, int q) {
    BasisCodec codec(L, q);
    if (index >= codec.dim()) throw ConfigError("decode_state: index out of range");
    BasisState s;
    s.spin_bits = codec.spin_word(index);
    if (q > 1) {
        s.qudit_digits.resize(L);
        std::uint64_t d = codec.qudit_word(index);
        for (int j = 0; j < L; ++j) {
            s.qudit_digits[j] = static_cast<int>(d % q);
            d /= q;
        }
    }
    return s;
}

std::uint64_t encode_state(const BasisState& s, int L, int q) {
    BasisCodec codec(L, q);
    if (s.spin_bits >> L) throw ConfigError("encode_state: spin word has bits beyond L sites");
    std::uint64_t qudit_word = 0;
    if (q > 1) {
        if (static_cast<int>(s.qudit_digits.size()) != L)
            throw ConfigError("encode_state: expected one qudit digit per site");
        for (int j = L - 1; j >= 0; --j) {
            int d = s.qudit_digits[j];
            if (d < 0 || d >= q) throw ConfigError("encode_state: qudit digit out of range");
            qudit_word = qudit_word * q + d;
        }
    }
    return codec.encode(s.spin_bits, qudit_word);
}

namespace {

// Next spin word with the same popcount (Gosper), ascending.
std::uint64_t next_combination(std::uint64_t v) {
    std::uint64_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
}

} // namespace

ChargeSector::ChargeSector(int L, int q, int n_up) : codec_(L, q), n_up_(n_up) {
    if (n_up < 0 || n_up > L)
        throw ConfigError("sector: n_up must lie in [0, L], got " + std::to_string(n_up));

    const std::uint64_t n_spin = binomial(L, n_up);
    const std::uint64_t dim = n_spin * codec_.qpowL;
    if (dim > (std::uint64_t{1} << 34))
        throw ResourceError("sector: dimension " + std::to_string(dim) + " too large to enumerate");
    states_.reserve(dim);

    std::uint64_t w = (n_up == 0) ? 0 : ((std::uint64_t{1} << n_up) - 1);
    for (std::uint64_t i = 0; i < n_spin; ++i) {
        const std::uint64_t base = w * codec_.qpowL;
        for (std::uint64_t u = 0; u < codec_.qpowL; ++u) states_.push_back(base + u);
        if (i + 1 < n_spin) w = next_combination(w);
    }

    // Inverse map: dense table when the full space is small, hash otherwise.
    const std::uint64_t full = codec_.dim();
    if (full <= (std::uint64_t{1} << 26)) {
        dense_inverse_.assign(full, -1);
        for (std::size_t k = 0; k < states_.size(); ++k)
            dense_inverse_[states_[k]] = static_cast<std::int32_t>(k);
    } else {
        sparse_inverse_.reserve(states_.size());
        for (std::size_t k = 0; k < states_.size(); ++k)
            sparse_inverse_[states_[k]] = static_cast<std::int32_t>(k);
    }
}

std::int64_t ChargeSector::index_of(std::uint64_t global_index) const {
    if (!dense_inverse_.empty()) {
        if (global_index >= dense_inverse_.size()) return -1;
        return dense_inverse_[global_index];
    }
    auto it = sparse_inverse_.find(global_index);
    return it == sparse_inverse_.end() ? -1 : it->second;
}

ChargeSector enumerate_sector(int L, int q, int n_up) {
    return ChargeSector(L, q, n_up);
}

std::shared_ptr<const ChargeSector> make_sector(int L, int q, int n_up) {
    return std::make_shared<const ChargeSector>(L, q, n_up);
}

} // namespace floq
