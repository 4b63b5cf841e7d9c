#include "masum/protocol.hpp"

#include <algorithm>

#include "masum/kernels.hpp"
#include "masum/rng.hpp"

namespace masum {

namespace {

void require_protocol_instance(const Instance& inst) {
    if (inst.n() < 1 || inst.t < 1) {
        throw PreconditionError("protocol: need n >= 1 and t >= 1");
    }
    for (std::uint64_t w : inst.weights) {
        if (w < 1 || w > inst.t) {
            throw PreconditionError(
                "protocol: weights must satisfy 1 <= w <= t so all subset sums fit in [0, nt]");
        }
    }
}

std::vector<std::uint64_t> residue_class_indices(std::uint64_t nt, std::uint64_t t,
                                                 std::uint64_t p) {
    std::vector<std::uint64_t> indices;
    for (std::uint64_t i = t % p; i <= nt; i += p) {
        indices.push_back(i);
    }
    return indices;
}

ResidueRow compressed_row_u64(const Instance& inst, std::uint64_t p, std::uint64_t r,
                              std::uint64_t q, const PolicyProfile& policy) {
    std::vector<std::uint64_t> prev(p, 0), cur(p, 0);
    prev[0] = 1 % q; // T'[0,0] = 1, T'[0,i] = 0 for 0 < i < p
    for (std::uint64_t w : inst.weights) {
        const std::uint64_t rw = powmod_u64(r, w, q);
        const std::uint64_t w_mod_p = w % p;
        kernels::fingerprint_row_update(cur.data(), prev.data(), p, w_mod_p, rw, q);
        if (policy.verifier_residue_range == ResidueRange::PaperOneToP) {
            // i = p writes residue 0 but reads T'[j-1, p], which is outside
            // the row and reads as zero; only the shifted term survives.
            cur[0] = mulmod_u64(rw, prev[(p - w_mod_p) % p], q);
        }
        std::swap(prev, cur);
    }
    ResidueRow row{Natural(q), {}};
    row.values.assign(prev.begin(), prev.end());
    return row;
}

ResidueRow compressed_row_big(const Instance& inst, std::uint64_t p, const Natural& r,
                              const Natural& q, const PolicyProfile& policy) {
    std::vector<Natural> prev(p), cur(p);
    prev[0] = 1 % q;
    for (std::uint64_t w : inst.weights) {
        const Natural rw = modpow(r, w, q).value;
        const std::uint64_t w_mod_p = w % p;
        for (std::uint64_t s = 0; s < p; ++s) {
            const std::uint64_t shifted = (s + p - w_mod_p) % p;
            cur[s] = (prev[s] + rw * prev[shifted]) % q;
        }
        if (policy.verifier_residue_range == ResidueRange::PaperOneToP) {
            cur[0] = rw * prev[(p - w_mod_p) % p] % q;
        }
        std::swap(prev, cur);
    }
    return ResidueRow{q, std::move(prev)};
}

} // namespace

std::uint64_t certificate_entry_count(std::uint64_t nt, std::uint64_t t, std::uint64_t p) {
    return (nt - t % p) / p + 1;
}

Certificate prove(const Instance& inst, const PolicyProfile& policy) {
    require_protocol_instance(inst);
    const CountTable table = subset_count_table(inst, policy);
    const PrimePick pick = pick_p(inst.n(), inst.t);
    const std::uint64_t p = static_cast<std::uint64_t>(pick.prime);
    Certificate cert{p, inst.t, {}};
    for (std::uint64_t i : residue_class_indices(table.upper, inst.t, p)) {
        cert.entries.push_back(CertEntry{i, table.counts[i]});
    }
    return cert;
}

ResidueRow compressed_row(const Instance& inst, std::uint64_t p, const Natural& r,
                          const Natural& q, const PolicyProfile& policy, TableEngine engine) {
    if (inst.n() < 1) {
        throw PreconditionError("compressed_row: need at least one weight");
    }
    if (p < 2 || q < 2) {
        throw PreconditionError("compressed_row: need p >= 2 and q >= 2");
    }
    if (r < 0 || r >= q) {
        throw PreconditionError("compressed_row: need 0 <= r < q");
    }
    if (engine == TableEngine::Auto) {
        engine = q < (Natural(1) << 63) ? TableEngine::Uint64 : TableEngine::BigInt;
    }
    if (engine == TableEngine::Uint64) {
        if (q >= (Natural(1) << 63)) {
            throw ResourceLimitError("compressed_row: u64 route needs q < 2^63");
        }
        return compressed_row_u64(inst, p, static_cast<std::uint64_t>(r),
                                  static_cast<std::uint64_t>(q), policy);
    }
    return compressed_row_big(inst, p, r, q, policy);
}

namespace {

void check_certificate_shape(const Instance& inst, const Certificate& cert) {
    if (cert.t != inst.t) {
        throw CertificateFormatError("certificate target differs from instance target");
    }
    if (cert.p < 2 || !is_prime(Natural(cert.p))) {
        throw CertificateFormatError("certificate prime fails primality");
    }
    const Natural p2 = Natural(cert.p) * cert.p;
    const Natural nt = Natural(inst.n()) * inst.t;
    if (p2 <= 4 * nt || p2 >= 16 * nt) {
        throw CertificateFormatError("certificate prime outside (2*sqrt(nt), 4*sqrt(nt))");
    }
    const auto expected = residue_class_indices(inst.nt(), inst.t, cert.p);
    if (cert.entries.size() != expected.size()) {
        throw CertificateFormatError("certificate index set has wrong size");
    }
    for (std::size_t k = 0; k < expected.size(); ++k) {
        if (cert.entries[k].index != expected[k]) {
            throw CertificateFormatError("certificate index set mismatch at position " +
                                         std::to_string(k));
        }
        if (cert.entries[k].count < 0) {
            throw CertificateFormatError("certificate count is negative");
        }
    }
}

} // namespace

Verdict verify(const Instance& inst, const Certificate& cert, const VerifierParams& params,
               const PolicyProfile& policy) {
    require_protocol_instance(inst);
    check_certificate_shape(inst, cert);
    if (params.q < 2 || params.r < 0 || params.r >= params.q) {
        throw PreconditionError("verify: need q >= 2 and 0 <= r < q");
    }
    const Natural q_lo = (Natural(1) << inst.n()) * inst.t;
    if (params.q <= q_lo || params.q >= 2 * q_lo || !is_prime(params.q)) {
        throw PreconditionError("verify: q must be a prime in (2^n*t, 2^(n+1)*t)");
    }
    std::vector<PolyEntry> poly;
    poly.reserve(cert.entries.size());
    std::optional<Natural> c_t;
    for (const auto& entry : cert.entries) {
        poly.push_back(PolyEntry{Natural(entry.index), entry.count});
        if (entry.index == cert.t) {
            c_t = entry.count;
        }
    }
    if (!c_t.has_value()) {
        throw CertificateFormatError("certificate lacks the entry at index t");
    }
    const Residue lhs = eval_sparse_poly(poly, params.r, params.q);
    const ResidueRow row = compressed_row(inst, cert.p, params.r, params.q, policy);
    const Residue rhs{row.values[cert.t % cert.p], params.q};
    if (lhs.value == rhs.value) {
        return Verdict{Outcome::Accept, c_t, lhs, rhs};
    }
    return Verdict{Outcome::Reject, std::nullopt, lhs, rhs};
}

Certificate tamper(const Certificate& cert, std::uint64_t index, const BigInt& delta) {
    Certificate out = cert;
    for (auto& entry : out.entries) {
        if (entry.index == index) {
            const BigInt changed = BigInt(entry.count) + delta;
            if (changed < 0) {
                throw InputError("tamper: count would become negative");
            }
            entry.count = Natural(changed);
            return out;
        }
    }
    throw InputError("tamper: index " + std::to_string(index) + " not in certificate");
}

VerifierParams draw_verifier_params(const Instance& inst, PickMode q_mode, std::uint64_t seed,
                                    const PolicyProfile& policy) {
    require_protocol_instance(inst);
    std::mt19937_64 g(seed);
    Natural q;
    if (q_mode == PickMode::Smallest) {
        q = pick_q(inst.n(), inst.t, PickMode::Smallest).prime;
    } else {
        // sub-seed the rejection sampler from the same stream
        q = pick_q(inst.n(), inst.t, PickMode::UniformRandom, g()).prime;
    }
    Natural r;
    if (policy.r_sampling == RSampling::ExcludeZero) {
        r = 1 + uniform_natural_below(g, q - 1);
    } else {
        r = uniform_natural_below(g, q);
    }
    return VerifierParams{std::move(q), std::move(r), q_mode, seed};
}

} // namespace masum
