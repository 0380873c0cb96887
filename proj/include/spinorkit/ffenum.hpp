/// @file ffenum.hpp
/// @brief Brute-force finite-field oracles: projective point enumeration,
/// point counts of the spinor tenfold and of G(2,5), section-point
/// enumeration, and sampled incidence crosschecks.
///
/// Enumeration kernels work on raw residues with early exit on the first
/// nonzero form; chunked parallel runs split the index space into fixed-size
/// blocks and merge in block order, so results are independent of the thread
/// count, byte for byte.

#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

#include "spinorkit/sections.hpp"
#include "spinorkit/sigma.hpp"

namespace spinorkit {

// ---------------------------------------------------------------------------
// PointStream: canonical representatives of P^N(F_p) in lexicographic order
// (first nonzero coordinate scaled to 1), restartable from a numeric cursor.
// ---------------------------------------------------------------------------

class PointStream {
  public:
    PointStream(std::size_t ambient_dim, std::uint32_t p)
        : n_(ambient_dim), p_(p) {
        require(is_prime_u32(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
        require(ambient_dim <= 15, ErrorCode::TooExpensive, "ambient dimension at most 15");
        // block sizes p^(n - j) for first-nonzero position j = n down to 0
        std::uint64_t pow = 1;
        total_ = 0;
        for (std::size_t j = 0; j <= n_; ++j) {
            total_ += pow;
            pow *= p_;
        }
    }

    [[nodiscard]] std::uint64_t total() const { return total_; }
    [[nodiscard]] std::uint64_t cursor() const { return cursor_; }
    void seek(std::uint64_t cursor) {
        require(cursor <= total_, ErrorCode::BadInput, "cursor out of range");
        cursor_ = cursor;
    }
    [[nodiscard]] bool done() const { return cursor_ >= total_; }

    // Decode the point at an absolute index; index < total().
    [[nodiscard]] std::vector<std::uint32_t> decode(std::uint64_t index) const {
        std::vector<std::uint32_t> coords(n_ + 1, 0);
        // blocks in stream order: j = n (size 1), j = n-1 (size p), ...
        std::uint64_t block = 1;
        std::size_t j = n_;
        std::uint64_t rest = index;
        for (;;) {
            if (rest < block) break;
            rest -= block;
            block *= p_;
            --j;
        }
        coords[j] = 1;
        for (std::size_t pos = n_; pos > j; --pos) {
            coords[pos] = static_cast<std::uint32_t>(rest % p_);
            rest /= p_;
        }
        return coords;
    }

    [[nodiscard]] std::vector<std::uint32_t> next() {
        require(!done(), ErrorCode::BadInput, "stream exhausted");
        return decode(cursor_++);
    }

  private:
    std::size_t n_;
    std::uint32_t p_;
    std::uint64_t total_ = 0;
    std::uint64_t cursor_ = 0;
};

inline PointStream enum_projective(std::size_t ambient_dim, std::uint32_t p) {
    return PointStream(ambient_dim, p);
}

// ---------------------------------------------------------------------------
// Raw-residue quadric evaluation.
// ---------------------------------------------------------------------------

namespace ffdetail {

struct RawTerm {
    std::uint16_t a, b;
    bool negative;
};

using RawQuadric = std::vector<RawTerm>;

inline std::vector<RawQuadric> sigma_raw_quadrics() {
    std::vector<RawQuadric> qs(10);
    for (int k = 0; k < 10; ++k)
        for (const auto& t : sigma_detail::quadric_terms[k])
            qs[k].push_back({static_cast<std::uint16_t>(t.a), static_cast<std::uint16_t>(t.b),
                             t.sign < 0});
    return qs;
}

inline bool all_quadrics_vanish(const std::vector<RawQuadric>& qs,
                                const std::vector<std::uint32_t>& coords, std::uint32_t p) {
    for (const auto& q : qs) {
        std::uint64_t acc = 0;
        for (const auto& t : q) {
            std::uint64_t v = (static_cast<std::uint64_t>(coords[t.a]) * coords[t.b]) % p;
            acc += t.negative ? (v ? p - v : 0) : v;
        }
        if (acc % p != 0) return false;
    }
    return true;
}

// General dense quadratic forms over raw residues, pairs (i <= j).
struct RawForm {
    std::vector<std::uint32_t> coeffs;  // n(n+1)/2 entries
};

template <class FGet>
RawForm to_raw_form(std::size_t vars, std::uint32_t p, FGet coeff_residue) {
    RawForm f;
    for (std::size_t i = 0; i < vars; ++i)
        for (std::size_t j = i; j < vars; ++j) f.coeffs.push_back(coeff_residue(i, j) % p);
    return f;
}

inline bool raw_form_vanishes(const RawForm& f, const std::vector<std::uint32_t>& z,
                              std::uint32_t p) {
    std::uint64_t acc = 0;
    std::size_t k = 0;
    const std::size_t n = z.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (z[i] == 0) {
            k += n - i;
            continue;
        }
        std::uint64_t row = 0;
        for (std::size_t j = i; j < n; ++j, ++k) {
            if (f.coeffs[k] == 0 || z[j] == 0) continue;
            row += (static_cast<std::uint64_t>(f.coeffs[k]) * z[j]) % p;
        }
        acc += (row % p) * z[i] % p;
    }
    return acc % p == 0;
}

// Deterministic chunked parallel map-reduce over an index range: the range is
// cut into fixed 1 << 16 sized blocks, workers process blocks, and results
// merge in block order regardless of the thread count.
inline constexpr std::uint64_t kBlockSize = 1u << 16;

template <class BlockFn>
void run_blocks(std::uint64_t total, unsigned threads, BlockFn fn) {
    std::uint64_t blocks = (total + kBlockSize - 1) / kBlockSize;
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads <= 1 || blocks <= 1) {
        for (std::uint64_t b = 0; b < blocks; ++b)
            fn(b, b * kBlockSize, std::min(total, (b + 1) * kBlockSize));
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (;;) {
                std::uint64_t b = next.fetch_add(1);
                if (b >= blocks) return;
                fn(b, b * kBlockSize, std::min(total, (b + 1) * kBlockSize));
            }
        });
    for (auto& th : pool) th.join();
}

}  // namespace ffdetail

// ---------------------------------------------------------------------------
// Point counts.
// ---------------------------------------------------------------------------

struct CountReport {
    std::uint64_t count = 0;
    std::uint64_t formula = 0;
    bool match = false;
};

// |Sigma(F_p)| by full enumeration of P^15(F_p) against the ten quadrics,
// cross-checked against prod_{i=1..4} (1 + p^i).
inline CountReport count_sigma(std::uint32_t p, unsigned threads = 1, bool force = false) {
    require(is_prime_u32(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    require(force || p <= 3, ErrorCode::TooExpensive,
            "p = " + std::to_string(p) + " enumerates (p^16-1)/(p-1) points; pass force to override");
    PointStream stream(15, p);
    const auto qs = ffdetail::sigma_raw_quadrics();
    const std::uint64_t total = stream.total();
    std::uint64_t blocks = (total + ffdetail::kBlockSize - 1) / ffdetail::kBlockSize;
    std::vector<std::uint64_t> per_block(blocks, 0);
    ffdetail::run_blocks(total, threads, [&](std::uint64_t b, std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t local = 0;
        auto coords = stream.decode(lo);
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (i != lo) coords = stream.decode(i);
            if (ffdetail::all_quadrics_vanish(qs, coords, p)) ++local;
        }
        per_block[b] = local;
    });
    CountReport rep;
    for (auto c : per_block) rep.count += c;
    rep.formula = 1;
    std::uint64_t pk = 1;
    for (int i = 1; i <= 4; ++i) {
        pk *= p;
        rep.formula *= 1 + pk;
    }
    rep.match = rep.count == rep.formula;
    return rep;
}

// |G(2,5)(F_p)| by enumeration of P^9 against the five Pfaffian relations,
// cross-checked against the Gaussian binomial (p^5-1)(p^4-1)/((p^2-1)(p-1)).
inline CountReport count_grassmann(std::uint32_t p, unsigned threads = 1, bool force = false) {
    require(is_prime_u32(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    require(force || p <= 7, ErrorCode::TooExpensive,
            "p = " + std::to_string(p) + " enumerates (p^10-1)/(p-1) points; pass force to override");
    // the five 4x4 Pfaffians of the generic skew matrix, on 10 coordinates
    std::vector<ffdetail::RawQuadric> rels;
    {
        for (int skip = 0; skip < 5; ++skip) {
            int idx[4], t = 0;
            for (int i = 0; i < 5; ++i)
                if (i != skip) idx[t++] = i;
            ffdetail::RawQuadric rel;
            auto pair_coord = [&](int i, int j) {
                return static_cast<std::uint16_t>(sigma_detail::x_coord(idx[i], idx[j]) - 1);
            };
            rel.push_back({pair_coord(0, 1), pair_coord(2, 3), false});
            rel.push_back({pair_coord(0, 2), pair_coord(1, 3), true});
            rel.push_back({pair_coord(0, 3), pair_coord(1, 2), false});
            rels.push_back(std::move(rel));
        }
    }
    PointStream stream(9, p);
    const std::uint64_t total = stream.total();
    std::uint64_t blocks = (total + ffdetail::kBlockSize - 1) / ffdetail::kBlockSize;
    std::vector<std::uint64_t> per_block(blocks, 0);
    ffdetail::run_blocks(total, threads, [&](std::uint64_t b, std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t local = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            auto coords = stream.decode(i);
            if (ffdetail::all_quadrics_vanish(rels, coords, p)) ++local;
        }
        per_block[b] = local;
    });
    CountReport rep;
    for (auto c : per_block) rep.count += c;
    std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
    std::uint64_t p4 = p2 * p2, p5 = p4 * p;
    rep.formula = (p5 - 1) / (p - 1) * ((p4 - 1) / (p2 - 1));
    rep.match = rep.count == rep.formula;
    return rep;
}

// ---------------------------------------------------------------------------
// Section point enumeration: run through P^{7+k}(F_p) in the section's
// ambient coordinates and keep the points of the tenfold.
// ---------------------------------------------------------------------------

inline std::vector<SigmaPoint<Fp>> enum_section_points(const LinearSection<Fp>& x,
                                                       unsigned threads = 1, bool force = false) {
    require(x.side == SectionSide::Plus, ErrorCode::WrongComponent,
            "transport a Minus-side section before enumerating");
    require(x.spec.is_prime_field(), ErrorCode::FieldMismatch, "enumeration needs a prime field");
    const std::uint32_t p = x.spec.p;
    PointStream stream(x.ambient_points() - 1, p);
    require(force || stream.total() <= 1000000000ull, ErrorCode::TooExpensive,
            "candidate count exceeds the enumeration budget; pass force to override");

    // the ten quadrics in section coordinates, reduced to raw residues
    auto rq = restricted_quadrics(x);
    std::vector<ffdetail::RawForm> raw;
    for (const auto& q : rq) {
        std::vector<std::uint32_t> coeffs;
        for (const auto& c : q.coefficients()) coeffs.push_back(c.residue());
        raw.push_back(ffdetail::RawForm{std::move(coeffs)});
    }

    const std::uint64_t total = stream.total();
    std::uint64_t blocks = (total + ffdetail::kBlockSize - 1) / ffdetail::kBlockSize;
    std::vector<std::vector<std::uint64_t>> hits(blocks);
    ffdetail::run_blocks(total, threads, [&](std::uint64_t b, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            auto z = stream.decode(i);
            bool all_zero = true;
            for (const auto& f : raw) {
                if (!ffdetail::raw_form_vanishes(f, z, p)) {
                    all_zero = false;
                    break;
                }
            }
            if (all_zero) hits[b].push_back(i);
        }
    });

    std::vector<SigmaPoint<Fp>> points;
    auto basis = ambient_basis(x);
    for (std::uint64_t b = 0; b < blocks; ++b)
        for (std::uint64_t i : hits[b]) {
            auto z = stream.decode(i);
            Vec<Fp> zf(z.size());
            for (std::size_t t = 0; t < z.size(); ++t) zf[t] = Fp::from_raw(z[t], p);
            points.push_back(lift_section_coordinates(basis, zf, x.spec));
        }
    return points;
}

// ---------------------------------------------------------------------------
// Incidence crosscheck: beta(s_c, s_w) = 0 iff dim(U_c ^ U_w) >= 1.
// ---------------------------------------------------------------------------

struct CrosscheckReport {
    std::uint64_t samples = 0;
    std::uint64_t violations = 0;
    std::array<std::uint64_t, 6> dim_counts{};  // observed dim(U_c ^ U_w)
};

inline CrosscheckReport incidence_crosscheck(std::uint32_t p, std::uint64_t n_samples,
                                             std::uint64_t seed, unsigned threads = 1) {
    require(p % 2 == 1 && is_prime_u32(p), ErrorCode::NotPrime, "crosscheck needs an odd prime");
    FieldSpec spec = FieldSpec::prime(p);
    const std::uint64_t chunk = 512;  // fixed sample blocks keep runs thread-count independent
    std::uint64_t blocks = (n_samples + chunk - 1) / chunk;
    std::vector<CrosscheckReport> per_block(blocks);

    ffdetail::run_blocks(blocks, threads, [&](std::uint64_t, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t b = lo; b < hi && b < blocks; ++b) {
            Rng master(seed);
            Rng rng = master.fork(b);
            CrosscheckReport local;
            std::uint64_t count = std::min(chunk, n_samples - b * chunk);
            for (std::uint64_t i = 0; i < count; ++i) {
                auto uc = random_isotropic<Fp>(rng, spec, Parity::Even);
                auto uw = random_isotropic<Fp>(rng, spec, Parity::Odd);
                bool beta_zero = beta_pair(pure_spinor(uc), pure_spinor(uw)).is_zero();
                std::size_t dim = incidence_dim(uc, uw);
                local.dim_counts[dim] += 1;
                if (beta_zero != (dim >= 1)) local.violations += 1;
                local.samples += 1;
            }
            per_block[b] = local;
        }
    });

    CrosscheckReport rep;
    for (const auto& r : per_block) {
        rep.samples += r.samples;
        rep.violations += r.violations;
        for (int d = 0; d < 6; ++d) rep.dim_counts[d] += r.dim_counts[d];
    }
    return rep;
}

}  // namespace spinorkit
