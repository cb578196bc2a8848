#include "josnim/closed_form.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <stdexcept>

#include "josnim/checked.hpp"
#include "josnim/errors.hpp"

namespace josnim {

namespace {

// (2s+1) * 2^n, or nullopt when it does not fit.
std::optional<std::uint64_t> n_family_base(GrundyValue s, std::uint64_t n) {
    try {
        return checked::mul(checked::add(checked::mul(s, 2), 1), checked::pow2(n));
    } catch (const std::overflow_error&) {
        return std::nullopt;
    }
}

// 2^(s-k-1)+k <= j <= 2^(s-k)+k-1, i.e. floor(log2(j-k)) == s-k-1.
bool in_ab_window(GrundyValue s, std::uint64_t k, std::uint64_t j) {
    if (s == 0 || k > s - 1 || j <= k) return false;
    return floor_log2(j - k) == s - k - 1;
}

}  // namespace

GrundyClass::GrundyClass(GrundyValue s, Family family) : s_(s), family_(family) {
    if (const auto* f = std::get_if<FamilyN>(&family_)) {
        const auto base = n_family_base(s, f->n);
        if (!base) throw DomainError("class N(n=" + std::to_string(f->n) + ") out of range for s=" + std::to_string(s));
        if (f->m > *base - 1)
            throw DomainError("class N requires m <= (2s+1)*2^n - 1 = " + std::to_string(*base - 1) +
                              ", got m=" + std::to_string(f->m));
        return;
    }
    const auto [k, j] = params();
    if (s == 0) throw DomainError("families A and B are empty for s=0");
    if (k > s - 1) throw DomainError("class A/B requires k <= s-1, got k=" + std::to_string(k));
    if (!in_ab_window(s, k, j))
        throw DomainError("class A/B requires 2^(s-k-1)+k <= j <= 2^(s-k)+k-1, got k=" + std::to_string(k) +
                          " j=" + std::to_string(j) + " s=" + std::to_string(s));
}

char GrundyClass::tag() const {
    switch (family_.index()) {
        case 0: return 'N';
        case 1: return 'A';
        default: return 'B';
    }
}

std::pair<std::uint64_t, std::uint64_t> GrundyClass::params() const {
    return std::visit(
        [](const auto& f) -> std::pair<std::uint64_t, std::uint64_t> {
            if constexpr (std::is_same_v<std::decay_t<decltype(f)>, FamilyN>)
                return {f.n, f.m};
            else
                return {f.k, f.j};
        },
        family_);
}

OddPart odd_part(std::uint64_t d) {
    if (d < 1) throw DomainError("odd_part requires d >= 1");
    const auto n = static_cast<std::uint64_t>(std::countr_zero(d));
    return {d >> n, n};
}

GrundyClass classify(Position p) {
    if (p.y <= p.x / 2) {
        const OddPart d = odd_part(checked::add(p.x - p.y, 1));
        return GrundyClass((d.odd - 1) / 2, FamilyN{d.n, p.y});
    }
    const std::uint64_t k = p.x / 2;
    const GrundyValue s = k + floor_log2(p.y - k) + 1;
    if (p.x % 2 == 0) return GrundyClass(s, FamilyA{k, p.y});
    return GrundyClass(s, FamilyB{k, p.y});
}

GrundyValue grundy_closed(Position p) { return classify(p).s(); }

Position class_position(const GrundyClass& c) {
    if (const auto* f = std::get_if<FamilyN>(&c.family())) {
        const std::uint64_t base = *n_family_base(c.s(), f->n);
        return {checked::add(base - 1, f->m), f->m};
    }
    const auto [k, j] = c.params();
    const std::uint64_t x = checked::mul(k, 2) + (c.tag() == 'B' ? 1 : 0);
    return {x, j};
}

std::vector<GrundyClass> enumerate_class_members(GrundyValue s, std::uint64_t x_max, std::uint64_t y_max) {
    std::vector<GrundyClass> out;

    for (std::uint64_t n = 0;; ++n) {
        const auto base = n_family_base(s, n);
        if (!base || *base - 1 > x_max) break;
        const std::uint64_t m_hi = std::min({*base - 1, y_max, x_max - (*base - 1)});
        for (std::uint64_t m = 0; m <= m_hi; ++m) out.emplace_back(s, FamilyN{n, m});
    }

    for (std::uint64_t k = 0; s > 0 && k <= s - 1 && k <= x_max / 2; ++k) {
        const std::uint64_t e = s - k - 1;
        if (e >= 64) continue;
        const std::uint64_t lo = (std::uint64_t{1} << e) + k;
        if (lo < k || lo > y_max) continue;  // lo < k: wrapped
        std::uint64_t hi = y_max;
        if (e + 1 < 64) {
            const std::uint64_t span_end = (std::uint64_t{1} << (e + 1)) - 1;
            if (span_end + k >= span_end) hi = std::min(hi, span_end + k);
        }
        for (std::uint64_t j = lo; j <= hi; ++j) out.emplace_back(s, FamilyA{k, j});
        if (k * 2 + 1 <= x_max)
            for (std::uint64_t j = lo; j <= hi; ++j) out.emplace_back(s, FamilyB{k, j});
    }

    std::sort(out.begin(), out.end(), [](const GrundyClass& a, const GrundyClass& b) {
        return class_position(a) < class_position(b);
    });
    return out;
}

std::vector<Position> enumerate_class(GrundyValue s, std::uint64_t x_max, std::uint64_t y_max) {
    std::vector<Position> out;
    for (const GrundyClass& c : enumerate_class_members(s, x_max, y_max)) out.push_back(class_position(c));
    return out;
}

std::string to_string(const GrundyClass& c) {
    const auto [a, b] = c.params();
    const bool n = c.tag() == 'N';
    return "s=" + std::to_string(c.s()) + " " + c.tag() + (n ? "(n=" : "(k=") + std::to_string(a) +
           (n ? ",m=" : ",j=") + std::to_string(b) + ")";
}

}  // namespace josnim
