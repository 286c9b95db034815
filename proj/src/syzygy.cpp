#include "pogcl/syzygy.hpp"

#include "pogcl/bareiss.hpp"
#include "pogcl/errors.hpp"
#include "pogcl/jacobian_matrix.hpp"
#include "pogcl/modular.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

namespace pogcl {

long monomial_basis_dim(int k) { return static_cast<long>(monomial_count(k)); }

// ---------------------------------------------------------------- backend

RankBackend RankBackend::exact(std::uint64_t seed) { return RankBackend(RankMode::exact, 1, seed); }

RankBackend RankBackend::modular(std::size_t prime_count, std::uint64_t seed) {
    if (prime_count < 2) throw std::invalid_argument("modular backend needs at least two primes");
    return RankBackend(RankMode::modular, prime_count, seed);
}

std::string RankBackend::to_string() const {
    return mode_ == RankMode::exact ? "exact" : "modular:" + std::to_string(primes_);
}

RankBackend RankBackend::parse(const std::string& text) {
    if (text == "exact") return exact();
    const std::string prefix = "modular:";
    if (text.rfind(prefix, 0) == 0) {
        const std::string n = text.substr(prefix.size());
        if (!n.empty() && n.size() < 4 && std::all_of(n.begin(), n.end(), ::isdigit)) {
            const auto count = std::stoul(n);
            if (count >= 2) return modular(count);
        }
        throw InputError("modular backend needs an integer prime count >= 2, got '" + n + "'");
    }
    throw InputError("unknown rank backend '" + text + "' (expected exact or modular:N)");
}

std::string BackendTag::to_string() const {
    if (mode == RankMode::exact) return certified ? "exact (certified)" : "exact (uncertified)";
    std::ostringstream os;
    os << "modular:" << primes.size() << " [";
    for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? ", " : "") << primes[i];
    os << "]";
    return os.str();
}

// ---------------------------------------------------------- classification

std::string kind_name(const Classification& c) {
    struct {
        std::string operator()(const Free&) const { return "free"; }
        std::string operator()(const NearlyFree&) const { return "nearly-free"; }
        std::string operator()(const PlusOneGenerated&) const { return "plus-one-generated"; }
        std::string operator()(const MSyzygy&) const { return "m-syzygy"; }
    } v;
    return std::visit(v, c);
}

std::string describe(const Classification& c) {
    struct {
        std::string operator()(const Free& f) const {
            return "Free (" + std::to_string(f.d1) + "," + std::to_string(f.d2) + ")";
        }
        std::string operator()(const NearlyFree& f) const {
            return "NearlyFree (" + std::to_string(f.d1) + "," + std::to_string(f.d2) + ")";
        }
        std::string operator()(const PlusOneGenerated& p) const {
            return "PlusOneGenerated (" + std::to_string(p.d1) + "," + std::to_string(p.d2) + "," +
                   std::to_string(p.level) + ") nu=" + std::to_string(p.defect);
        }
        std::string operator()(const MSyzygy& m) const { return "MSyzygy{" + std::to_string(m.q) + "}"; }
    } v;
    return std::visit(v, c);
}

bool hilbert_series_consistent(const std::vector<long>& ar_dims, const std::vector<int>& exponents,
                               const std::vector<int>& second_syzygy_degrees) {
    for (std::size_t k = 0; k < ar_dims.size(); ++k) {
        long expected = 0;
        for (int d : exponents) expected += monomial_basis_dim(static_cast<int>(k) - d);
        for (int e : second_syzygy_degrees) expected -= monomial_basis_dim(static_cast<int>(k) - e);
        if (expected != ar_dims[k]) return false;
    }
    return true;
}

namespace {

// Raised when a prime turns out to be unlucky for the exact lift; the engine reseeds.
struct UnluckyPrime {
    std::string why;
};

// Exact lifting of kernel vectors of J_k by CRT over fresh primes.
class Lifter {
public:
    Lifter(const JacobianMatrix& jac, std::uint32_t reference_prime, std::uint64_t seed)
        : jac_(jac), rng_(seed), used_{reference_prime} {}

    // Kernel vectors of the reduced echelon form attached to `cols`, over Q.
    std::vector<std::vector<Rational>> lift(int k, const EchelonInfo& ref, const std::vector<std::size_t>& cols,
                                            const std::vector<std::vector<std::uint32_t>>& ref_images,
                                            std::uint32_t ref_prime) {
        const std::size_t n = jac_.cols(k);
        CrtAccumulator acc(cols.size() * n);
        auto add = [&](const std::vector<std::vector<std::uint32_t>>& images, std::uint32_t p) {
            std::vector<std::uint32_t> flat;
            flat.reserve(cols.size() * n);
            for (const auto& v : images) flat.insert(flat.end(), v.begin(), v.end());
            acc.add(flat, p);
        };
        add(ref_images, ref_prime);
        std::size_t next_attempt = 2, skipped = 0;
        while (acc.prime_count() < kMaxPrimes) {
            const std::uint32_t p = fresh_prime();
            const PrimeField field(p);
            auto m = jac_.modular(k, field);
            const EchelonInfo info = echelonize(m, field, true);
            if (info.pivot_cols != ref.pivot_cols) {
                if (++skipped > 8) throw UnluckyPrime{"reference prime gives a non-generic echelon form"};
                continue;
            }
            std::vector<std::vector<std::uint32_t>> images;
            for (std::size_t c : cols) images.push_back(kernel_vector(m, info, c, field));
            add(images, p);
            if (acc.prime_count() < next_attempt) continue;
            next_attempt = acc.prime_count() + std::max<std::size_t>(1, acc.prime_count() / 3);
            auto flat = acc.reconstruct();
            if (!flat) continue;
            std::vector<std::vector<Rational>> out;
            bool ok = true;
            for (std::size_t i = 0; i < cols.size() && ok; ++i) {
                std::vector<Rational> v(flat->begin() + static_cast<long>(i * n),
                                        flat->begin() + static_cast<long>((i + 1) * n));
                ok = jac_.annihilates(k, v);
                out.push_back(std::move(v));
            }
            if (ok) return out;
        }
        throw ConsistencyFailure("rational reconstruction of a syzygy did not converge");
    }

private:
    static constexpr std::size_t kMaxPrimes = 4000;
    const JacobianMatrix& jac_;
    std::mt19937_64 rng_;
    std::set<std::uint32_t> used_;

    std::uint32_t fresh_prime() {
        for (;;) {
            const std::uint32_t p = random_prime(rng_);
            if (used_.insert(p).second) return p;
        }
    }
};

struct Generator {
    int degree;
    std::vector<std::uint32_t> image;  // mod the scan's prime, length 3 s(degree)
};

// Degree-by-degree scan of AR(f) modulo one prime.
class DegreeScan {
public:
    DegreeScan(const JacobianMatrix& jac, std::uint32_t prime, std::size_t index, const RankBackend::FaultHook* hook,
               Lifter* lifter)
        : jac_(jac), field_(prime), index_(index), hook_(hook), lifter_(lifter) {}

    std::uint32_t prime() const { return field_.modulus(); }
    const std::vector<long>& ar() const { return ar_; }
    const std::vector<long>& mg() const { return mg_; }

    long rank_phase(int k) {
        auto m = jac_.modular(k, field_);
        std::size_t rank = rank_mod(std::move(m), field_);
        if (hook_ && *hook_) rank = (*hook_)(index_, k, rank);
        const long dim = static_cast<long>(jac_.cols(k)) - static_cast<long>(rank);
        ar_.push_back(dim);
        return dim;
    }

    long generator_phase(int k) {
        const std::size_t n = jac_.cols(k);
        IncrementalBasis span(n, field_);
        for (const auto& g : generators_) insert_multiples(span, g, k);
        const long needed = ar_[static_cast<std::size_t>(k)] - static_cast<long>(span.rank());
        if (needed < 0) throw ConsistencyFailure("syzygy multiples exceed the kernel dimension");
        if (needed > 0) select_new(span, k, static_cast<std::size_t>(needed));
        mg_.push_back(needed);
        return needed;
    }

private:
    const JacobianMatrix& jac_;
    PrimeField field_;
    std::size_t index_;
    const RankBackend::FaultHook* hook_;
    Lifter* lifter_;
    std::vector<long> ar_, mg_;
    std::vector<Generator> generators_;

    // All monomial multiples u * g landing in degree k.
    void insert_multiples(IncrementalBasis& span, const Generator& g, int k) const {
        const std::size_t sd = monomial_count(g.degree), sk = monomial_count(k);
        const auto shifts = monomials(k - g.degree);
        const auto base = monomials(g.degree);
        for (const auto& u : shifts) {
            std::vector<std::uint32_t> row(3 * sk, 0);
            for (std::size_t comp = 0; comp < 3; ++comp)
                for (std::size_t w = 0; w < sd; ++w) {
                    const std::uint32_t val = g.image[comp * sd + w];
                    if (val == 0) continue;
                    const Exponent e{u.a + base[w].a, u.b + base[w].b, u.c + base[w].c};
                    row[comp * sk + monomial_index(e)] = val;
                }
            span.insert(std::move(row));
        }
    }

    void select_new(IncrementalBasis& span, int k, std::size_t needed) {
        auto m = jac_.modular(k, field_);
        const EchelonInfo info = echelonize(m, field_, true);
        std::vector<bool> is_pivot(m.cols(), false);
        for (std::size_t c : info.pivot_cols) is_pivot[c] = true;
        std::vector<std::size_t> chosen;
        std::vector<std::vector<std::uint32_t>> images;
        for (std::size_t c = 0; c < m.cols() && chosen.size() < needed; ++c) {
            if (is_pivot[c]) continue;
            auto v = kernel_vector(m, info, c, field_);
            if (span.insert(v)) {
                chosen.push_back(c);
                images.push_back(std::move(v));
            }
        }
        if (chosen.size() < needed) throw ConsistencyFailure("kernel has fewer new directions than counted");
        if (lifter_) {
            const auto exact = lifter_->lift(k, info, chosen, images, field_.modulus());
            for (std::size_t i = 0; i < exact.size(); ++i)
                for (std::size_t j = 0; j < exact[i].size(); ++j) {
                    const auto r = field_.from_rational(exact[i][j]);
                    if (!r || *r != images[i][j]) throw UnluckyPrime{"exact syzygy differs from its modular image"};
                }
        }
        for (auto& v : images) generators_.push_back({k, std::move(v)});
    }
};

long hilbert_value(int j, int m, const std::vector<long>& ar) {
    const int k = j - m + 1;
    if (k < 0) return monomial_basis_dim(j);
    return monomial_basis_dim(j) - 3 * monomial_basis_dim(k) + ar.at(static_cast<std::size_t>(k));
}

struct Pipeline {
    std::vector<long> ar, mg;
    std::vector<int> exponents, seconds;
    std::optional<HilbertWitness> witness;
    BackendTag tag;
};

struct PipelineOptions {
    int k_max;
    bool generators = true;
    bool tau = false;
    bool check_complete = true;
};

class PipelineRunner {
public:
    PipelineRunner(const HomPoly& f, const RankBackend& backend, std::uint64_t seed)
        : jac_(f), m_(f.degree()), backend_(backend) {
        const bool exact = backend.mode() == RankMode::exact;
        primes_ = random_primes(exact ? 1 : backend.prime_count(), seed);
        if (exact) lifter_.emplace(jac_, primes_[0], seed ^ 0x9e3779b97f4a7c15ULL);
        for (std::size_t i = 0; i < primes_.size(); ++i)
            scans_.emplace_back(jac_, primes_[i], i, &backend.fault_hook(), lifter_ ? &*lifter_ : nullptr);
    }

    Pipeline run(const PipelineOptions& opt) {
        int k = 0;
        for (; k <= opt.k_max; ++k) step(k, opt.generators);
        Pipeline out;
        if (opt.tau) out.witness = find_witness(k, opt.generators);
        out.ar = scans_.front().ar();
        out.tag.mode = backend_.mode();
        out.tag.primes = primes_;
        if (!opt.generators) {
            out.tag.certified = false;
            return out;
        }
        out.mg = scans_.front().mg();
        derive_degrees(out, opt.check_complete);
        if (backend_.mode() == RankMode::exact) {
            // A shared degree between generators and relations is the one pattern that a
            // rank drop of the multiples modulo p could fake.
            bool coincide = false;
            for (int d : out.exponents)
                coincide = coincide || std::count(out.seconds.begin(), out.seconds.end(), d) > 0;
            out.tag.certified = !coincide;
        }
        return out;
    }

private:
    JacobianMatrix jac_;
    int m_;
    const RankBackend& backend_;
    std::vector<std::uint32_t> primes_;
    std::optional<Lifter> lifter_;
    std::vector<DegreeScan> scans_;

    void step(int k, bool generators) {
        std::vector<long> dims;
        for (auto& s : scans_) dims.push_back(s.rank_phase(k));
        compare(dims, "dim AR_" + std::to_string(k));
        if (!generators) return;
        std::vector<long> counts;
        for (auto& s : scans_) counts.push_back(s.generator_phase(k));
        compare(counts, "minimal generators in degree " + std::to_string(k));
    }

    void compare(const std::vector<long>& values, const std::string& what) const {
        for (std::size_t i = 1; i < values.size(); ++i)
            if (values[i] != values[0]) {
                std::ostringstream os;
                os << "modular backends disagree on " << what << ": " << values[0] << " (p=" << primes_[0] << ") vs "
                   << values[i] << " (p=" << primes_[i] << ")";
                throw BackendDisagreement(os.str());
            }
    }

    // Three equal Hilbert values from 3m-5 on; scans further degrees while unsettled.
    HilbertWitness find_witness(int& next_k, bool generators) {
        const int start = std::max(3 * m_ - 5, 0);
        const int cap = 2 * (m_ - 1) + m_ + 3;
        for (;;) {
            const auto& ar = scans_.front().ar();
            const int last_j = next_k - 1 + m_ - 1;
            for (int j = start; j + 2 <= last_j; ++j) {
                const long h = hilbert_value(j, m_, ar);
                if (h == hilbert_value(j + 1, m_, ar) && h == hilbert_value(j + 2, m_, ar)) {
                    if (h > static_cast<long>(m_ - 1) * (m_ - 1))
                        throw NonReducedInput("Milnor algebra dimension exceeds (m-1)^2; the curve is not reduced");
                    HilbertWitness w;
                    w.degree_checked = j;
                    for (int i = 0; i <= j + 2; ++i) w.values.push_back(hilbert_value(i, m_, ar));
                    w.stabilized_value = h;
                    return w;
                }
            }
            if (next_k > cap)
                throw NonReducedInput("Hilbert function of the Milnor algebra does not stabilize; the curve is not reduced");
            step(next_k++, generators);
        }
    }

    void derive_degrees(Pipeline& out, bool check_complete) const {
        const auto& ar = out.ar;
        const auto& mg = out.mg;
        for (std::size_t k = 0; k < mg.size(); ++k)
            for (long i = 0; i < mg[k]; ++i) out.exponents.push_back(static_cast<int>(k));
        // Relations are the excess of generators over the Hilbert numerator (1-t)^3 sum dim AR_k t^k.
        for (std::size_t k = 0; k < ar.size(); ++k) {
            long numer = 0;
            const long binom[4] = {1, -3, 3, -1};
            for (std::size_t i = 0; i < 4 && i <= k; ++i) numer += binom[i] * ar[k - i];
            const long excess = mg[k] - numer;
            if (excess < 0) {
                if (!check_complete) break;
                throw Truncated("generator count falls short of the Hilbert numerator in degree " +
                                std::to_string(k));
            }
            for (long i = 0; i < excess; ++i) out.seconds.push_back(static_cast<int>(k));
        }
        if (!check_complete) return;
        // A rank 2 module: q generators, q-2 relations. The linear term of the Hilbert
        // polynomial of M(f) vanishes only when sum d - sum e = m - 1.
        long balance = 0;
        for (int d : out.exponents) balance += d;
        for (int e : out.seconds) balance -= e;
        if (out.exponents.size() != out.seconds.size() + 2 || balance != m_ - 1)
            throw Truncated("degree scan to " + std::to_string(ar.size() - 1) + " found " +
                            std::to_string(out.exponents.size()) + " generators and " +
                            std::to_string(out.seconds.size()) + " relations; raise k_max");
    }
};

void require_curve(const HomPoly& f) {
    if (f.is_zero() || f.degree() < 1) throw WrongDegree("expected a nonzero form of degree at least 1");
}

// Runs the pipeline, reseeding when the exact lift meets an unlucky prime.
Pipeline run_pipeline(const HomPoly& f, const RankBackend& backend, const PipelineOptions& opt) {
    require_curve(f);
    std::uint64_t seed = backend.seed();
    for (int attempt = 0;; ++attempt) {
        try {
            PipelineRunner runner(f, backend, seed);
            return runner.run(opt);
        } catch (const UnluckyPrime& e) {
            if (attempt >= 4) throw ConsistencyFailure("exact lift failed repeatedly: " + e.why);
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
        }
    }
}

int default_k_max(const HomPoly& f) { return std::max(2 * (f.degree() - 1), 0); }

}  // namespace

// ------------------------------------------------------------------ engine

long SyzygyEngine::ar_dimension(const HomPoly& f, int k) const {
    require_curve(f);
    if (k < 0) return 0;
    if (backend_.mode() == RankMode::exact) {
        const JacobianMatrix jac(f);
        return static_cast<long>(jac.cols(k)) - static_cast<long>(bareiss_rank(jac.integer(k), Integer(1)));
    }
    PipelineOptions opt{k, false, false, false};
    return run_pipeline(f, backend_, opt).ar.at(static_cast<std::size_t>(k));
}

Resolution SyzygyEngine::exponents_and_second_syzygies(const HomPoly& f, std::optional<int> k_max) const {
    require_curve(f);
    PipelineOptions opt{k_max.value_or(default_k_max(f)), true, false, true};
    Pipeline p = run_pipeline(f, backend_, opt);
    return Resolution{p.exponents, p.seconds, p.ar, p.tag};
}

TjurinaResult SyzygyEngine::tjurina(const HomPoly& f) const {
    require_curve(f);
    // Exact dimensions are certified through the lifted generators, so exact mode keeps them.
    PipelineOptions opt{default_k_max(f), backend_.mode() == RankMode::exact, true, false};
    Pipeline p = run_pipeline(f, backend_, opt);
    return TjurinaResult{p.witness->stabilized_value, *p.witness};
}

std::vector<long> SyzygyEngine::certified_ar_dimensions(const HomPoly& f, int through) const {
    require_curve(f);
    PipelineOptions opt{through, true, false, false};
    Pipeline p = run_pipeline(f, RankBackend::exact(backend_.seed()), opt);
    return p.ar;
}

SyzygyProfile SyzygyEngine::classify(const HomPoly& f) const {
    require_curve(f);
    PipelineOptions opt{default_k_max(f), true, true, true};
    Pipeline p = run_pipeline(f, backend_, opt);

    SyzygyProfile out;
    const int m = f.degree();
    out.curve_degree = m;
    out.exponents = p.exponents;
    out.second_syzygy_degrees = p.seconds;
    out.tau = p.witness->stabilized_value;
    out.witness = *p.witness;
    out.backend = p.tag;
    out.ar_dims = p.ar;

    const auto& d = out.exponents;
    const auto& e = out.second_syzygy_degrees;
    const long mm = m - 1;
    // Constant term of the Hilbert polynomial predicted by the resolution.
    {
        const int j = 4 * m + (e.empty() ? 0 : e.back()) + (d.empty() ? 0 : d.back());
        const int k = j - m + 1;
        long predicted = monomial_basis_dim(j) - 3 * monomial_basis_dim(k);
        for (int di : d) predicted += monomial_basis_dim(k - di);
        for (int ej : e) predicted -= monomial_basis_dim(k - ej);
        if (predicted != out.tau)
            throw Truncated("resolution predicts tau = " + std::to_string(predicted) + " but the Milnor algebra gives " +
                            std::to_string(out.tau));
    }
    if (d.size() == 2) {
        if (d[0] + d[1] != m - 1) throw ConsistencyFailure("two generators whose degrees do not sum to m-1");
        if (out.tau != mm * mm - static_cast<long>(d[0]) * d[1])
            throw ConsistencyFailure("free curve violates tau = (m-1)^2 - d1 d2");
        out.classification = Free{d[0], d[1]};
    } else if (d.size() == 3 && e.size() == 1 && d[0] + d[1] == m && e[0] == d[2] + 1) {
        const int nu = d[2] - d[1] + 1;
        if (out.tau != mm * mm - static_cast<long>(d[0]) * (m - d[0] - 1) - nu)
            throw ConsistencyFailure("plus-one generated profile violates tau = (m-1)^2 - d1(m-d1-1) - nu");
        out.defect = nu;
        if (d[2] == d[1])
            out.classification = NearlyFree{d[0], d[1]};
        else
            out.classification = PlusOneGenerated{d[0], d[1], d[2], nu};
    } else {
        out.classification = MSyzygy{static_cast<int>(d.size())};
    }
    return out;
}

}  // namespace pogcl
