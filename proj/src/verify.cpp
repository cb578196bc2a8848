#include "josnim/verify.hpp"

#include <algorithm>
#include <exception>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "josnim/closed_form.hpp"
#include "josnim/errors.hpp"
#include "josnim/josephus.hpp"

namespace josnim {

namespace {

struct Partial {
    std::uint64_t cases = 0;
    std::optional<Counterexample> counterexample;
    std::map<std::string, std::uint64_t> counters;

    void fail(Counterexample c) {
        if (!counterexample || c.key < counterexample->key) counterexample = std::move(c);
    }

    void merge(Partial&& other) {
        cases += other.cases;
        if (other.counterexample) fail(std::move(*other.counterexample));
        for (const auto& [name, n] : other.counters) counters[name] += n;
    }
};

unsigned thread_count(SweepOptions opts, std::uint64_t work_items) {
    unsigned t = opts.threads != 0 ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
    if (work_items < t) t = static_cast<unsigned>(std::max<std::uint64_t>(work_items, 1));
    return t;
}

// Runs body(i, partial) for every i in [lo, hi]. Thread t takes the strided
// chunk lo+t, lo+t+T, ..., which balances sweeps whose cost grows with i.
template <class Body>
Partial sweep(std::uint64_t lo, std::uint64_t hi, SweepOptions opts, Body body) {
    if (hi < lo) return {};
    const unsigned threads = thread_count(opts, hi - lo + 1);
    std::vector<Partial> parts(threads);
    if (threads == 1) {
        for (std::uint64_t i = lo; i <= hi; ++i) body(i, parts[0]);
        return std::move(parts[0]);
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            try {
                for (std::uint64_t i = lo + t; i <= hi; i += threads) body(i, parts[t]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Partial out;
    for (auto& p : parts) out.merge(std::move(p));
    return out;
}

VerificationReport finish(std::string name, std::vector<ParamRange> range, Partial&& part,
                          std::chrono::steady_clock::time_point start) {
    VerificationReport r;
    r.check_name = std::move(name);
    r.range = std::move(range);
    r.cases_checked = part.cases;
    r.first_counterexample = std::move(part.counterexample);
    r.passed = !r.first_counterexample.has_value();
    r.counters = std::move(part.counters);
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

std::string grundy_text(const char* label, GrundyValue v) { return std::string(label) + "=" + std::to_string(v); }

}  // namespace

bool same_outcome(const VerificationReport& a, const VerificationReport& b) {
    return a.check_name == b.check_name && a.range == b.range && a.cases_checked == b.cases_checked &&
           a.passed == b.passed && a.first_counterexample == b.first_counterexample && a.counters == b.counters;
}

VerificationReport verify_grundy_equivalence(std::uint64_t x_max, std::uint64_t y_max, SweepOptions opts) {
    const auto start = std::chrono::steady_clock::now();
    const GrundyTable oracle(x_max, y_max);
    VerificationReport r = verify_grundy_equivalence(oracle, opts);
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

VerificationReport verify_grundy_equivalence(const GrundyTable& oracle, SweepOptions opts) {
    const auto start = std::chrono::steady_clock::now();
    Partial part = sweep(0, oracle.x_max(), opts, [&](std::uint64_t x, Partial& acc) {
        for (std::uint64_t y = 0; y <= oracle.y_max(); ++y) {
            const Position p{x, y};
            const GrundyValue expected = oracle.at(p);
            const GrundyValue actual = grundy_closed(p);
            ++acc.cases;
            if (expected != actual)
                acc.fail({{x, y, expected}, {{"x", x}, {"y", y}}, grundy_text("oracle", expected),
                          grundy_text("closed", actual)});
        }
    });
    return finish("grundy_equivalence", {{"x", 0, oracle.x_max()}, {"y", 0, oracle.y_max()}}, std::move(part), start);
}

VerificationReport verify_partition(std::uint64_t x_max, std::uint64_t y_max, std::uint64_t s_max,
                                    SweepOptions opts) {
    const auto start = std::chrono::steady_clock::now();

    // Phase 1: enumerate every class by its parameters and check the round trip
    // class -> position -> class.
    std::vector<std::vector<Position>> members(s_max + 1);
    std::mutex members_mutex;
    Partial part = sweep(0, s_max, opts, [&](std::uint64_t s, Partial& acc) {
        std::vector<Position> found;
        for (const GrundyClass& c : enumerate_class_members(s, x_max, y_max)) {
            const Position p = class_position(c);
            found.push_back(p);
            ++acc.counters["members_enumerated"];
            const GrundyClass back = classify(p);
            if (back != c)
                acc.fail({{p.x, p.y, s}, {{"x", p.x}, {"y", p.y}, {"s", s}}, "classify(class_position(c)) = " + to_string(c),
                          to_string(back)});
        }
        std::lock_guard lock(members_mutex);
        members[s] = std::move(found);
    });

    // Phase 2: record which enumerations contain each box position.
    const std::uint64_t width = y_max + 1;
    constexpr std::uint64_t none = ~std::uint64_t{0};
    std::vector<std::uint64_t> owner((x_max + 1) * width, none);
    std::vector<std::uint8_t> multiplicity((x_max + 1) * width, 0);
    for (std::uint64_t s = 0; s <= s_max; ++s) {
        for (const Position p : members[s]) {
            const std::size_t i = p.x * width + p.y;
            if (multiplicity[i] == 0) owner[i] = s;
            if (multiplicity[i] < 255) ++multiplicity[i];
        }
    }

    // Phase 3: every box position is classified once, round-trips, and sits in
    // exactly the enumeration for its value.
    part.merge(sweep(0, x_max, opts, [&](std::uint64_t x, Partial& acc) {
        for (std::uint64_t y = 0; y <= y_max; ++y) {
            const Position p{x, y};
            ++acc.cases;
            const GrundyClass c = classify(p);
            const std::size_t i = x * width + y;
            const std::vector<std::pair<std::string, std::uint64_t>> inputs{{"x", x}, {"y", y}};
            if (class_position(c) != p) {
                acc.fail({{x, y, c.s()}, inputs, "class_position(classify(p)) = " + to_string(p),
                          to_string(class_position(c))});
                continue;
            }
            if (c.s() > s_max) {
                ++acc.counters["positions_above_s_max"];
                if (multiplicity[i] != 0)
                    acc.fail({{x, y, c.s()}, inputs, "no enumeration up to s_max (value " + std::to_string(c.s()) + ")",
                              "enumerated under s=" + std::to_string(owner[i])});
                continue;
            }
            if (multiplicity[i] != 1 || owner[i] != c.s()) {
                const std::string got = multiplicity[i] == 0
                                            ? std::string("in no enumeration")
                                            : "in " + std::to_string(multiplicity[i]) + " enumeration(s), first s=" +
                                                  std::to_string(owner[i]);
                acc.fail({{x, y, c.s()}, inputs, "exactly in enumeration s=" + std::to_string(c.s()), got});
            }
        }
    }));
    return finish("partition", {{"x", 0, x_max}, {"y", 0, y_max}, {"s", 0, s_max}}, std::move(part), start);
}

VerificationReport verify_move_lemmas(std::uint64_t x_max, std::uint64_t y_max, SweepOptions opts) {
    const auto start = std::chrono::steady_clock::now();
    const GrundyTable oracle(x_max, y_max);
    VerificationReport r = verify_move_lemmas(oracle, opts);
    r.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

VerificationReport verify_move_lemmas(const GrundyTable& oracle, SweepOptions opts) {
    const auto start = std::chrono::steady_clock::now();
    Partial part = sweep(0, oracle.x_max(), opts, [&](std::uint64_t x, Partial& acc) {
        std::vector<bool> reached;
        for (std::uint64_t y = 0; y <= oracle.y_max(); ++y) {
            const Position p{x, y};
            const GrundyValue s = oracle.at(p);
            ++acc.cases;
            reached.assign(s, false);
            std::optional<Position> same;
            for_each_successor(p, [&](Position q) {
                const GrundyValue g = oracle.at(q);
                if (g < s) reached[g] = true;
                if (g == s && !same) same = q;
            });
            const std::vector<std::pair<std::string, std::uint64_t>> inputs{{"x", x}, {"y", y}, {"s", s}};
            if (same) {
                acc.fail({{x, y, s}, inputs, "no successor with value " + std::to_string(s),
                          "successor " + to_string(*same) + " has value " + std::to_string(s)});
            }
            for (GrundyValue target = 0; target < s; ++target) {
                // Reachability splits on x >= 2s' versus x <= 2s'-1.
                ++acc.counters[x >= 2 * target ? "reach_x_ge_2s" : "reach_x_le_2s_minus_1"];
                if (!reached[target])
                    acc.fail({{x, y, s}, inputs, "some successor with value " + std::to_string(target),
                              "value " + std::to_string(target) + " unreachable"});
            }
        }
    });
    return finish("move_lemmas", {{"x", 0, oracle.x_max()}, {"y", 0, oracle.y_max()}}, std::move(part), start);
}

VerificationReport verify_correspondence(std::uint64_t x_max, SweepOptions opts) {
    const auto start = std::chrono::steady_clock::now();
    Partial part = sweep(0, x_max, opts, [&](std::uint64_t x, Partial& acc) {
        const EliminationOrder order = elimination_order(x + 1);
        for (std::uint64_t y = 0; y <= x / 2; ++y) {
            const Position p{x, y};
            const GrundyClass c = classify(p);
            ++acc.cases;
            const std::vector<std::pair<std::string, std::uint64_t>> inputs{{"x", x}, {"y", y}, {"s", c.s()}};
            if (c.tag() != 'N') {
                acc.fail({{x, y, c.s()}, inputs, "family N", to_string(c)});
                continue;
            }
            ++acc.counters[c.params().first == 0 ? "n_zero" : "n_positive"];
            const std::uint64_t f = order.from_end(c.s());
            if (f != 2 * y + 1)
                acc.fail({{x, y, c.s()}, inputs, "F_s(x+1)=" + std::to_string(2 * y + 1),
                          "F_s(x+1)=" + std::to_string(f)});
        }
    });
    return finish("correspondence", {{"x", 0, x_max}}, std::move(part), start);
}

VerificationReport verify_josephus_forms(std::uint64_t v_max, SweepOptions opts) {
    const auto start = std::chrono::steady_clock::now();
    constexpr std::uint64_t naive_limit = 512;
    Partial part = sweep(1, v_max, opts, [&](std::uint64_t v, Partial& acc) {
        const EliminationOrder order = elimination_order(v);
        if (v <= naive_limit) {
            ++acc.counters["naive_order_checks"];
            if (elimination_order_naive(v) != order)
                acc.fail({{v, 0, 0}, {{"v", v}}, "ring-scan order", "linked-ring order differs"});
        }
        std::optional<EliminationOrder> even;
        std::optional<EliminationOrder> odd;
        if (v <= v_max / 2) {
            even = elimination_order(2 * v);
            odd = elimination_order(2 * v + 1);
        }
        for (std::uint64_t s = 0; s < v; ++s) {
            ++acc.cases;
            const std::vector<std::pair<std::string, std::uint64_t>> inputs{{"s", s}, {"v", v}};
            const std::uint64_t sim = order.from_end(s);
            const std::uint64_t closed = f_s_closed({s, v});
            const std::uint64_t rec = f_s_recursive({s, v});
            if (sim != closed || sim != rec)
                acc.fail({{v, s, 0}, inputs, "simulated=closed=recursive",
                          "simulated=" + std::to_string(sim) + " closed=" + std::to_string(closed) +
                              " recursive=" + std::to_string(rec)});
            if (even) {
                ++acc.counters["halving_residuals"];
                const std::uint64_t f2v = even->from_end(s);
                const std::uint64_t f2v1 = odd->from_end(s);
                if (f2v != 2 * sim - 1 || f2v1 != 2 * sim + 1)
                    acc.fail({{v, s, 1}, inputs,
                              "F_s(2v)=" + std::to_string(2 * sim - 1) + " F_s(2v+1)=" + std::to_string(2 * sim + 1),
                              "F_s(2v)=" + std::to_string(f2v) + " F_s(2v+1)=" + std::to_string(f2v1)});
            }
        }
    });
    return finish("josephus_forms", {{"v", 1, v_max}, {"s", 0, v_max == 0 ? 0 : v_max - 1}}, std::move(part), start);
}

VerificationReport verify_lemma_inclusions(std::uint64_t s_max, SweepOptions opts) {
    if (s_max > 40) throw DomainError("verify_lemma_inclusions: s_max above 40 is not supported (work ~ 2^s_max)");
    const auto start = std::chrono::steady_clock::now();
    Partial part = sweep(0, s_max, opts, [&](std::uint64_t s, Partial& acc) {
        // (a) for h <= s-2, columns 2h and 2h+1 between rows h+1 and
        // 2^(s-h-1)+h-1 belong to families A / B with value in [h+1, s-1].
        for (std::uint64_t h = 0; h + 2 <= s; ++h) {
            const std::uint64_t j_hi = (std::uint64_t{1} << (s - h - 1)) + h - 1;
            for (std::uint64_t j = h + 1; j <= j_hi; ++j) {
                for (const std::uint64_t x : {2 * h, 2 * h + 1}) {
                    ++acc.cases;
                    ++acc.counters["inclusion_a"];
                    const GrundyClass c = classify({x, j});
                    const char want = x % 2 == 0 ? 'A' : 'B';
                    if (c.tag() != want || c.params().first != h || c.s() < h + 1 || c.s() > s - 1)
                        acc.fail({{x, j, s}, {{"x", x}, {"y", j}, {"s", s}},
                                  std::string("family ") + want + " with k=" + std::to_string(h) + " and value in [" +
                                      std::to_string(h + 1) + "," + std::to_string(s - 1) + "]",
                                  to_string(c)});
                }
            }
        }
        // (b) with h = s: columns 2h and 2h+1 up to row h lie in family N with value <= h.
        const std::uint64_t h = s;
        for (std::uint64_t y = 0; y <= h; ++y) {
            for (const std::uint64_t x : {2 * h, 2 * h + 1}) {
                ++acc.cases;
                ++acc.counters["inclusion_b"];
                const GrundyClass c = classify({x, y});
                if (c.tag() != 'N' || c.s() > h)
                    acc.fail({{x, y, s}, {{"x", x}, {"y", y}, {"h", h}},
                              "family N with value <= " + std::to_string(h), to_string(c)});
            }
        }
        // (c) families A and B satisfy x <= 2s-1 and 2y > x.
        if (s >= 1) {
            const std::uint64_t y_hi = (std::uint64_t{1} << s) + s;
            for (const GrundyClass& c : enumerate_class_members(s, 2 * s, y_hi)) {
                if (c.tag() == 'N') continue;
                ++acc.cases;
                ++acc.counters["bound_c"];
                const Position p = class_position(c);
                if (p.x > 2 * s - 1 || 2 * p.y <= p.x)
                    acc.fail({{p.x, p.y, s}, {{"x", p.x}, {"y", p.y}, {"s", s}}, "x <= 2s-1 and 2y > x",
                              to_string(p) + " in " + to_string(c)});
            }
        }
    });
    return finish("lemma_inclusions", {{"s", 0, s_max}}, std::move(part), start);
}

std::string to_text(const VerificationReport& r) {
    std::ostringstream out;
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.check_name;
    for (const ParamRange& pr : r.range) out << "  " << pr.name << "=[" << pr.lo << "," << pr.hi << "]";
    out << "  cases=" << r.cases_checked << "  elapsed=" << std::fixed << std::setprecision(3)
        << std::chrono::duration<double>(r.elapsed).count() << "s\n";
    if (r.first_counterexample) {
        const Counterexample& c = *r.first_counterexample;
        out << "  counterexample:";
        for (const auto& [name, value] : c.inputs) out << " " << name << "=" << value;
        out << "\n    expected: " << c.expected << "\n    actual:   " << c.actual << "\n";
    }
    for (const auto& [name, n] : r.counters) out << "  " << name << ": " << n << "\n";
    return out.str();
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json range = nlohmann::json::array();
    for (const ParamRange& pr : r.range) range.push_back({{"name", pr.name}, {"lo", pr.lo}, {"hi", pr.hi}});
    nlohmann::json counterexample = nullptr;
    if (r.first_counterexample) {
        const Counterexample& c = *r.first_counterexample;
        nlohmann::json inputs = nlohmann::json::object();
        for (const auto& [name, value] : c.inputs) inputs[name] = value;
        counterexample = {{"inputs", inputs}, {"expected", c.expected}, {"actual", c.actual}};
    }
    return {
        {"check_name", r.check_name},
        {"range", range},
        {"cases_checked", r.cases_checked},
        {"passed", r.passed},
        {"first_counterexample", counterexample},
        {"elapsed_ms", std::chrono::duration<double, std::milli>(r.elapsed).count()},
        {"counters", r.counters},
    };
}

}  // namespace josnim
