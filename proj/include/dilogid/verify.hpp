#pragma once

#include <dilogid/catalog.hpp>
#include <dilogid/detail/summation.hpp>
#include <dilogid/registry.hpp>

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace dilogid {

struct verify_options {
    // Glob patterns over ids; empty selects everything.
    std::vector<std::string> patterns;
    std::optional<double> tol;
    unsigned parallelism = 1;
    std::optional<std::size_t> samples;
    std::uint64_t seed = 0;
    bool stress = false;
    // Replaces the default samples of every selected identity.
    std::vector<param_map> explicit_samples;
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view s)
{
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline bool glob_match(const std::string& pattern, const std::string& id) { return fnmatch(pattern.c_str(), id.c_str(), 0) == 0; }

}  // namespace detail

// Throws domain_error when params lie outside the declared domain.
inline verification_result evaluate_identity(const identity_record& rec, const param_map& params, double tol, std::size_t index = 0)
{
    rec.domain.validate(params);
    verification_result r;
    r.id = rec.id;
    r.title = rec.title;
    r.anchor = rec.anchor;
    r.sample_index = index;
    r.params = params;
    r.tol = tol;
    r.informational = rec.informational;

    auto before = detail::numeric_evaluations;
    r.rhs = rec.rhs(params);
    if (detail::numeric_evaluations != before) throw std::logic_error(rec.id + ": right side ran a numeric evaluation");

    before = detail::numeric_evaluations;
    estimate e = rec.lhs(params, 0.1 * tol);
    if (detail::numeric_evaluations == before) throw std::logic_error(rec.id + ": left side ran no quadrature or series");

    r.lhs = e.value;
    r.lhs_error_estimate = e.error_estimate;
    r.abs_residual = std::abs(r.lhs - r.rhs);
    double scale = std::abs(r.rhs);
    r.rel_residual = scale > 0.0 ? r.abs_residual / scale : r.abs_residual;
    r.pass = std::isfinite(r.abs_residual) && std::isfinite(e.error_estimate) && passes(r.abs_residual, tol, e.error_estimate);
    r.diagnostics = e.note;
    if (!rec.note.empty()) r.diagnostics += (r.diagnostics.empty() ? "" : "; ") + rec.note;
    return r;
}

inline verification_result evaluate_identity(std::string_view id, const param_map& params, double tol)
{
    const identity_record* rec = lookup(id);
    if (!rec) throw std::invalid_argument("unknown identity " + std::string(id));
    return evaluate_identity(*rec, params, tol);
}

inline std::vector<const identity_record*> select(const std::vector<std::string>& patterns)
{
    std::vector<const identity_record*> out;
    for (const auto& rec : catalog()) {
        bool keep = patterns.empty();
        for (const auto& p : patterns) keep = keep || detail::glob_match(p, rec.id);
        if (keep) out.push_back(&rec);
    }
    std::sort(out.begin(), out.end(), [](auto* a, auto* b) { return a->id < b->id; });
    return out;
}

inline std::vector<sample> samples_for(const identity_record& rec, const verify_options& opt)
{
    std::vector<sample> out;
    if (!opt.explicit_samples.empty()) {
        for (const auto& p : opt.explicit_samples) out.push_back({p, false});
        return out;
    }
    for (const auto& s : rec.samples)
        if (!s.stress) out.push_back(s);
    if (opt.samples) {
        std::size_t want = *opt.samples;
        if (out.size() > want) out.resize(want);
        if (out.size() < want && rec.domain.draw) {
            std::mt19937_64 rng(opt.seed ^ detail::fnv1a(rec.id));
            while (out.size() < want) out.push_back({rec.domain.draw(rng), false});
        }
    }
    if (opt.stress)
        for (const auto& s : rec.samples)
            if (s.stress) out.push_back(s);
    return out;
}

inline std::vector<verification_result> verify_all(const verify_options& opt = {})
{
    struct job {
        const identity_record* rec;
        sample smp;
        std::size_t index;
    };
    std::vector<job> jobs;
    for (const auto* rec : select(opt.patterns)) {
        if (rec->informational && !opt.stress) continue;
        auto smps = samples_for(*rec, opt);
        for (std::size_t i = 0; i < smps.size(); ++i) jobs.push_back({rec, smps[i], i});
    }

    std::vector<verification_result> results(jobs.size());
    auto run = [&](const job& j) {
        double tol = opt.tol.value_or(j.rec->default_tol);
        verification_result r;
        try {
            r = evaluate_identity(*j.rec, j.smp.params, tol, j.index);
        } catch (const std::exception& e) {
            r.id = j.rec->id;
            r.title = j.rec->title;
            r.anchor = j.rec->anchor;
            r.sample_index = j.index;
            r.params = j.smp.params;
            r.tol = tol;
            r.informational = j.rec->informational;
            r.pass = false;
            r.diagnostics = std::string("error: ") + e.what();
        }
        r.stress = j.smp.stress;
        return r;
    };

    unsigned workers = std::max(1u, opt.parallelism);
    if (workers == 1 || jobs.size() < 2) {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = run(jobs[i]);
        return results;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, jobs.size()); ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run(jobs[i]);
        });
    for (auto& t : pool) t.join();
    return results;
}

// Stress samples and informational records never count against the sweep.
inline bool counts(const verification_result& r) { return !r.stress && !r.informational; }

inline bool all_pass(const std::vector<verification_result>& results)
{
    for (const auto& r : results)
        if (counts(r) && !r.pass) return false;
    return true;
}

}  // namespace dilogid
