#include "gapedit/gapedit.h"

#include <chrono>
#include <cstring>
#include <fstream>
#include <memory>
#include <string>
#include <variant>

#include <json.hpp>

#include "gapedit/edit_distance.hpp"
#include "gapedit/errors.hpp"
#include "gapedit/greedy_wave.hpp"
#include "gapedit/instance_gen.hpp"
#include "gapedit/one_sided.hpp"
#include "gapedit/selftest.hpp"
#include "gapedit/two_sided.hpp"

struct gapedit_string {
    gapedit::ByteString s;
};

struct gapedit_index {
    std::variant<gapedit::OneSidedIndex, gapedit::TwoSidedIndex> index;
};

namespace {

using namespace gapedit;
using Clock = std::chrono::steady_clock;

thread_local std::string g_last_error;

class ApiError : public std::runtime_error {
public:
    ApiError(gapedit_status status, const std::string& what) : std::runtime_error(what), status_(status) {}
    gapedit_status status() const noexcept { return status_; }

private:
    gapedit_status status_;
};

template <class F>
gapedit_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return GAPEDIT_OK;
    } catch (const ApiError& e) {
        g_last_error = e.what();
        return e.status();
    } catch (const IoError& e) {
        g_last_error = e.what();
        return GAPEDIT_ERR_IO;
    } catch (const FormatError& e) {
        g_last_error = e.what();
        return GAPEDIT_ERR_FORMAT;
    } catch (const nlohmann::json::exception& e) {
        g_last_error = e.what();
        return GAPEDIT_ERR_FORMAT;
    } catch (const LimitError& e) {
        g_last_error = e.what();
        return GAPEDIT_ERR_LIMIT;
    } catch (const PreconditionError& e) {
        g_last_error = e.what();
        return GAPEDIT_ERR_PRECONDITION;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return GAPEDIT_ERR_INVALID_ARGUMENT;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GAPEDIT_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return GAPEDIT_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) {
        throw ApiError(GAPEDIT_ERR_INVALID_ARGUMENT, what);
    }
}

void precondition(bool ok, const std::string& what) {
    if (!ok) {
        throw ApiError(GAPEDIT_ERR_PRECONDITION, what);
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void fill(gapedit_result* out, Verdict verdict, std::int64_t iterations, const OpCounters& c,
          std::int64_t sample_size, Clock::time_point start) {
    out->verdict = verdict == Verdict::small ? GAPEDIT_SMALL : GAPEDIT_LARGE;
    out->iterations = iterations;
    out->oracle_queries = c.oracle_queries;
    out->hash_retrievals = c.hash_retrievals;
    out->table_lookups = c.table_lookups;
    out->symbols_hashed = c.symbols_hashed;
    out->preprocess_ops = c.preprocess_ops;
    out->sample_size = sample_size;
    out->wall_time_s = std::chrono::duration<double>(Clock::now() - start).count();
}

WaveMode wave_mode(gapedit_mode mode) {
    switch (mode) {
        case GAPEDIT_MODE_NOPREP:
            return WaveMode::noprep;
        case GAPEDIT_MODE_ONE_SIDED:
            return WaveMode::one_sided;
        case GAPEDIT_MODE_TWO_SIDED:
            return WaveMode::two_sided;
    }
    throw ApiError(GAPEDIT_ERR_INVALID_ARGUMENT, "unknown mode");
}

}  // namespace

extern "C" {

const char* gapedit_last_error(void) { return g_last_error.c_str(); }

const char* gapedit_status_name(gapedit_status status) {
    switch (status) {
        case GAPEDIT_OK:
            return "ok";
        case GAPEDIT_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case GAPEDIT_ERR_IO:
            return "i/o error";
        case GAPEDIT_ERR_FORMAT:
            return "format error";
        case GAPEDIT_ERR_LIMIT:
            return "limit exceeded";
        case GAPEDIT_ERR_PRECONDITION:
            return "precondition failed";
        case GAPEDIT_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

int gapedit_abi_version(void) { return GAPEDIT_ABI_VERSION; }

void gapedit_free(char* text) { delete[] text; }

gapedit_status gapedit_string_from_bytes(const uint8_t* bytes, size_t len, gapedit_string** out) {
    return guarded([&] {
        require(out != nullptr && (bytes != nullptr || len == 0), "gapedit_string_from_bytes: null pointer");
        *out = new gapedit_string{ByteString::from_bytes({bytes, len})};
    });
}

gapedit_status gapedit_string_load(const char* path, gapedit_string** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "gapedit_string_load: null pointer");
        *out = new gapedit_string{read_string_file(path)};
    });
}

int64_t gapedit_string_length(const gapedit_string* s) { return s ? s->s.size() : -1; }

void gapedit_string_free(gapedit_string* s) { delete s; }

gapedit_status gapedit_gen(const gapedit_gen_params* p, const char* prefix, gapedit_string** a, gapedit_string** b,
                           char** manifest_json) {
    return guarded([&] {
        require(p != nullptr, "gapedit_gen: null parameters");
        Instance inst;
        switch (p->kind) {
            case GAPEDIT_GEN_PLANTED:
                inst = gen_planted(p->n, p->edits, p->sigma, p->seed, p->raw_edits != 0);
                break;
            case GAPEDIT_GEN_LARGE_SIDE: {
                require(p->k >= 1, "gapedit_gen: large side needs k >= 1");
                const std::int64_t threshold = p->threshold > 0 ? p->threshold : 40 * p->k * p->k;
                inst = gen_large_side(p->n, p->k, threshold, p->sigma, p->seed);
                break;
            }
            case GAPEDIT_GEN_PERIODIC:
                inst = gen_periodic(p->n, p->period, p->sigma, p->seed, p->edits);
                break;
            default:
                require(false, "gapedit_gen: unknown kind");
        }
        if (prefix) {
            write_instance(inst, prefix);
        }
        if (manifest_json) {
            *manifest_json = dup_string(gapedit::manifest_json(inst));
        }
        if (a) {
            *a = new gapedit_string{inst.a};
        }
        if (b) {
            *b = new gapedit_string{std::move(inst.b)};
        }
    });
}

gapedit_status gapedit_instance_load(const char* prefix, gapedit_string** a, gapedit_string** b,
                                     char** manifest_json) {
    return guarded([&] {
        require(prefix != nullptr && a != nullptr && b != nullptr, "gapedit_instance_load: null pointer");
        Instance inst = read_instance(prefix);
        auto sa = std::make_unique<gapedit_string>(gapedit_string{std::move(inst.a)});
        auto sb = std::make_unique<gapedit_string>(gapedit_string{std::move(inst.b)});
        if (manifest_json) {
            inst.a = sa->s;
            inst.b = sb->s;
            *manifest_json = dup_string(gapedit::manifest_json(inst));
        }
        *a = sa.release();
        *b = sb.release();
    });
}

gapedit_status gapedit_exact_ed(const gapedit_string* a, const gapedit_string* b, int64_t* out) {
    return guarded([&] {
        require(a != nullptr && b != nullptr && out != nullptr, "gapedit_exact_ed: null pointer");
        *out = edit_distance_exact(a->s, b->s);
    });
}

gapedit_status gapedit_index_build(gapedit_index_kind kind, const gapedit_string* a, int64_t k, int64_t l,
                                   uint64_t seed, int64_t limit, gapedit_index** out) {
    return guarded([&] {
        require(a != nullptr && out != nullptr, "gapedit_index_build: null pointer");
        require(k >= 1, "gapedit_index_build: need k >= 1");
        const HashConfig cfg = HashConfig::from_seed(seed);
        switch (kind) {
            case GAPEDIT_INDEX_ONE_SIDED_GAP:
                *out = new gapedit_index{one_sided_preprocess(a->s, k, cfg)};
                return;
            case GAPEDIT_INDEX_ONE_SIDED_WAVE:
                *out = new gapedit_index{one_sided_preprocess_wave(a->s, l, k, cfg)};
                return;
            case GAPEDIT_INDEX_TWO_SIDED:
                *out = new gapedit_index{
                    two_sided_preprocess(a->s, k, cfg, limit > 0 ? limit : kTwoSidedDefaultLimit)};
                return;
        }
        require(false, "gapedit_index_build: unknown kind");
    });
}

gapedit_status gapedit_index_save(const gapedit_index* index, const char* path) {
    return guarded([&] {
        require(index != nullptr && path != nullptr, "gapedit_index_save: null pointer");
        std::visit([&](const auto& idx) { idx.save(path); }, index->index);
    });
}

gapedit_status gapedit_index_load(const char* path, gapedit_index** out) {
    return guarded([&] {
        require(path != nullptr && out != nullptr, "gapedit_index_load: null pointer");
        std::ifstream f(path, std::ios::binary);
        if (!f) {
            throw IoError(std::string("cannot open ") + path);
        }
        char magic[6] = {};
        f.read(magic, sizeof magic);
        const std::string m(magic, static_cast<std::size_t>(f.gcount()));
        f.close();
        if (m == "GEDT1S") {
            *out = new gapedit_index{OneSidedIndex::load(path)};
        } else if (m == "GEDT2S") {
            *out = new gapedit_index{TwoSidedIndex::load(path)};
        } else {
            throw FormatError(std::string(path) + ": not a gapedit index file");
        }
    });
}

gapedit_status gapedit_index_info(const gapedit_index* index, gapedit_index_kind* kind, int64_t* n, int64_t* k,
                                  int64_t* l, int64_t* preprocess_ops) {
    return guarded([&] {
        require(index != nullptr, "gapedit_index_info: null index");
        gapedit_index_kind kd = GAPEDIT_INDEX_TWO_SIDED;
        std::int64_t nn = 0, kk = 0, ll = 0, ops = 0;
        if (const auto* one = std::get_if<OneSidedIndex>(&index->index)) {
            const bool wave = one->kind() == IndexKind::wave;
            kd = wave ? GAPEDIT_INDEX_ONE_SIDED_WAVE : GAPEDIT_INDEX_ONE_SIDED_GAP;
            nn = one->n();
            kk = one->k();
            ll = wave ? one->granularity() : 0;
            ops = one->preprocess_ops();
        } else {
            const auto& two = std::get<TwoSidedIndex>(index->index);
            nn = two.n();
            kk = two.k();
            ops = two.preprocess_ops();
        }
        if (kind) *kind = kd;
        if (n) *n = nn;
        if (k) *k = kk;
        if (l) *l = ll;
        if (preprocess_ops) *preprocess_ops = ops;
    });
}

void gapedit_index_free(gapedit_index* index) { delete index; }

gapedit_status gapedit_gap(gapedit_mode mode, const gapedit_string* a, const gapedit_string* b, int64_t k,
                           uint64_t seed, const gapedit_index* index, int64_t limit, gapedit_result* out) {
    return guarded([&] {
        require(a != nullptr && b != nullptr && out != nullptr, "gapedit_gap: null pointer");
        require(k >= 1, "gapedit_gap: need k >= 1");
        require(a->s.size() == b->s.size(), "gapedit_gap: |A| must equal |B|");
        const auto start = Clock::now();
        const HashConfig cfg = HashConfig::from_seed(seed);
        GapRun run;
        std::int64_t built_ops = 0;
        switch (mode) {
            case GAPEDIT_MODE_NOPREP:
                run = gap_noprep(a->s, b->s, k, seed);
                break;
            case GAPEDIT_MODE_ONE_SIDED: {
                std::unique_ptr<OneSidedIndex> owned;
                const OneSidedIndex* idx = nullptr;
                if (index) {
                    idx = std::get_if<OneSidedIndex>(&index->index);
                    precondition(idx && idx->kind() == IndexKind::gap,
                                 "gapedit_gap: one-sided mode needs a one-sided gap index");
                } else {
                    owned = std::make_unique<OneSidedIndex>(one_sided_preprocess(a->s, k, cfg));
                    idx = owned.get();
                    built_ops = idx->preprocess_ops();
                }
                precondition(idx->k() == k && idx->n() == a->s.size(),
                             "gapedit_gap: index was built for k = " + std::to_string(idx->k()) +
                                 ", n = " + std::to_string(idx->n()));
                run = gap_one_sided(*idx, a->s, b->s);
                break;
            }
            case GAPEDIT_MODE_TWO_SIDED: {
                std::unique_ptr<TwoSidedIndex> owned;
                const TwoSidedIndex* idx = nullptr;
                if (index) {
                    idx = std::get_if<TwoSidedIndex>(&index->index);
                    precondition(idx != nullptr, "gapedit_gap: two-sided mode needs a two-sided index");
                } else {
                    owned = std::make_unique<TwoSidedIndex>(
                        two_sided_preprocess(a->s, k, cfg, limit > 0 ? limit : kTwoSidedDefaultLimit));
                    idx = owned.get();
                    built_ops = idx->preprocess_ops();
                }
                precondition(idx->k() == k && idx->n() == a->s.size(),
                             "gapedit_gap: index was built for k = " + std::to_string(idx->k()) +
                                 ", n = " + std::to_string(idx->n()));
                run = gap_two_sided(*idx, a->s, b->s);
                break;
            }
            default:
                require(false, "gapedit_gap: unknown mode");
        }
        OpCounters c = run.result.counters;
        c.preprocess_ops += built_ops;
        fill(out, run.result.verdict, run.result.iterations, c, run.sample_size, start);
    });
}

gapedit_status gapedit_wave(gapedit_mode mode, const gapedit_string* a, const gapedit_string* b, int64_t k,
                            int64_t l, uint64_t seed, const gapedit_index* index, gapedit_result* out) {
    return guarded([&] {
        require(a != nullptr && b != nullptr && out != nullptr, "gapedit_wave: null pointer");
        require(a->s.size() == b->s.size(), "gapedit_wave: |A| must equal |B|");
        const WaveMode wm = wave_mode(mode);
        validate_wave_parameters(a->s.size(), k, l, wm);
        const auto start = Clock::now();
        WaveRun run;
        if (index && wm != WaveMode::noprep) {
            const auto* idx = std::get_if<OneSidedIndex>(&index->index);
            precondition(idx && idx->kind() == IndexKind::wave, "gapedit_wave: needs a one-sided wave index");
            precondition(idx->k() == k && idx->granularity() == l && idx->n() == a->s.size(),
                         "gapedit_wave: index was built for k = " + std::to_string(idx->k()) +
                             ", l = " + std::to_string(idx->granularity()) + ", n = " + std::to_string(idx->n()));
            run = gap_wave_indexed(*idx, a->s, b->s, wm);
        } else {
            run = gap_wave(a->s, b->s, k, l, wm, seed);
        }
        OpCounters c = run.result.counters;
        c.preprocess_ops += run.preprocess_ops;
        fill(out, run.result.verdict, k, c, run.sample_size, start);
    });
}

gapedit_status gapedit_selftest(uint64_t seed, const char* scratch_dir, int* passed, char** report) {
    return guarded([&] {
        require(passed != nullptr, "gapedit_selftest: null pointer");
        const SelftestReport r = run_selftest(seed, scratch_dir ? scratch_dir : "");
        *passed = r.passed() ? 1 : 0;
        if (report) {
            *report = dup_string(r.to_text());
        }
    });
}

}  // extern "C"
