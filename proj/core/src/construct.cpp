#include "plsrd/construct.hpp"

#include <algorithm>
#include <vector>

#include "plsrd/bounds.hpp"
#include "plsrd/errors.hpp"

namespace plsrd {

namespace {

struct Strip {
    std::vector<Label> top;
    std::vector<Label> bottom;
};

// Five-column blocks used by both the ladder and the prism patterns. Y is X
// with the rows swapped.
const Strip kBlockX = {{-1, 1, -1, 2, 2}, {2, 2, -1, 1, -1}};
const Strip kBlockY = {{2, 2, -1, 1, -1}, {-1, 1, -1, 2, 2}};

// Ladder tails appended after the 5k-column prefix, one per n mod 5.
const Strip kLadderTail[5] = {
    {{}, {}},
    {{1}, {1}},
    {{1, 2}, {1, -1}},
    {{1, -1, 2}, {2, -1, 1}},
    {{1, -1, 2, 2}, {2, -1, 1, -1}},
};

// Prism closing blocks, one per n mod 10.
const Strip kPrism3 = {{1, -1, 2}, {2, -1, 1}};
const Strip kPrismTail[10] = {
    {{}, {}},
    {{2, 2, -1, 1, 1, -1}, {-1, 1, -1, 2, 1, 2}},
    {{2, 2, -1, 1, 2, -1, 1}, {-1, 1, -1, 2, 1, -1, 2}},
    {{2, 2, -1, 1, 2, -1, 1, -1}, {-1, 1, -1, 2, 1, -1, 2, 2}},
    {{1, -1, 2, 1}, {2, -1, 1, 1}},
    {{-1, 1, -1, 2, 1}, {2, 2, -1, 1, 1}},
    {{1}, {1}},
    {{2, 1}, {-1, 1}},
    {{2, -1, 1}, {1, -1, 2}},
    {{2, -1, 1, -1}, {1, -1, 2, 2}},
};

void append(Strip& strip, const Strip& block) {
    strip.top.insert(strip.top.end(), block.top.begin(), block.top.end());
    strip.bottom.insert(strip.bottom.end(), block.bottom.begin(), block.bottom.end());
}

// Top row onto vertices 0..n-1, bottom row onto n..2n-1.
Labeling strip_to_labeling(const Strip& strip) {
    Labeling f;
    f.labels = strip.top;
    f.labels.insert(f.labels.end(), strip.bottom.begin(), strip.bottom.end());
    return f;
}

Labeling complete_labeling(int n) {
    Labeling f = Labeling::all_ones(n);
    f[0] = -1;
    f[1] = 2;
    return f;
}

Labeling bipartite_labeling(int p, int n) {
    Labeling f = Labeling::all_ones(p + n);
    f[0] = -1;      // first vertex of part X
    f[1] = 2;       // second vertex of part X
    f[p] = -1;      // first vertex of part Y
    f[p + 1] = 2;   // second vertex of part Y
    return f;
}

Labeling star_labeling(int n) {
    Labeling f = Labeling::all_ones(n + 1);
    f[0] = 2;   // hub
    f[1] = -1;  // lowest leaf
    return f;
}

Labeling wheel_labeling(int n) {
    Labeling f = Labeling::all_ones(n + 1);
    const int k = n / 4;
    const int r = n % 4;
    // Cycle vertices 1..n in blocks of four: 2, -1, -1, 2.
    for (int i = 0; i < k; ++i) {
        f[4 * i + 1] = 2;
        f[4 * i + 2] = -1;
        f[4 * i + 3] = -1;
        f[4 * i + 4] = 2;
    }
    if (r == 3) {
        f[4 * k + 1] = 2;
        f[4 * k + 2] = -1;
        // third tail vertex stays 1
    }
    // r == 1 and r == 2 leave the tail at 1.
    return f;
}

std::vector<Label> repeat_block_121(int count) {
    std::vector<Label> out;
    for (int i = 0; i < count; ++i) out.insert(out.end(), {-1, 2, 1});
    return out;
}

Labeling path_labeling(int n) {
    const int k = n / 3;
    const int r = n % 3;
    std::vector<Label> f;
    if (r == 0) {
        f = repeat_block_121(k);
    } else if (r == 1) {
        f = repeat_block_121(k - 1);
        f.insert(f.end(), {-1, 2, 2, -1});
    } else {
        f = repeat_block_121(k);
        f.insert(f.end(), {2, -1});
    }
    return Labeling(std::move(f));
}

Labeling cycle_labeling(int n) {
    const int k = n / 3;
    const int r = n % 3;
    std::vector<Label> f;
    if (r == 0) {
        f = repeat_block_121(k);
    } else if (r == 1) {
        f = repeat_block_121(k - 1);
        f.insert(f.end(), {-1, 2, 1, 1});
    } else {
        f = repeat_block_121(k);
        f.insert(f.end(), {1, 1});
    }
    return Labeling(std::move(f));
}

Labeling ladder_labeling(int n) {
    const int k = n / 5;
    const int r = n % 5;
    Strip strip;
    // k alternating blocks ending with Y: even k starts with X, odd with Y.
    for (int i = 0; i < k; ++i) append(strip, (k - i) % 2 == 0 ? kBlockX : kBlockY);
    append(strip, kLadderTail[r]);
    return strip_to_labeling(strip);
}

Labeling prism_labeling(int n) {
    if (n == 3) return strip_to_labeling(kPrism3);
    const int m = n / 10;
    const int r = n % 10;
    Strip strip;
    // Residues 1..3 fold the closing block into the last X|Y pair; the rest
    // keep all m pairs and append X (residues 6..9) plus the closing block.
    int pairs = (r >= 1 && r <= 3) ? m - 1 : m;
    for (int i = 0; i < pairs; ++i) {
        append(strip, kBlockX);
        append(strip, kBlockY);
    }
    if (r == 0) return strip_to_labeling(strip);
    if ((r >= 1 && r <= 3) || r >= 6) append(strip, kBlockX);
    append(strip, kPrismTail[r]);
    return strip_to_labeling(strip);
}

Labeling grid3_labeling(int n) {
    Labeling f = Labeling::all_ones(3 * n);
    for (int j = 0; j < n; ++j) {
        f[3 * j] = (j % 2 == 0) ? -1 : 1;      // top row alternates from -1
        f[3 * j + 1] = 2;                       // middle row
        f[3 * j + 2] = (j % 2 == 0) ? 1 : -1;  // bottom row alternates from 1
    }
    return f;
}

Labeling flower_snark_labeling(int n) {
    const int m = 2 * n + 1;
    Labeling f = Labeling::filled(4 * m, 1);
    auto a = [&](int i) -> Label& { return f[i]; };
    auto b = [&](int i) -> Label& { return f[m + i]; };
    auto c = [&](int i) -> Label& { return f[2 * m + i]; };
    auto d = [&](int i) -> Label& { return f[3 * m + i]; };
    // Both parities place a fixed pattern around the central index n and
    // mirror the periodic part; the label of the periodic a entry flips
    // between -1 and 2 with period 4, the c and d entries take the opposite.
    auto periodic = [](int j) -> std::pair<Label, Label> {
        bool low = (j % 4 == 0 || j % 4 == 1);
        return low ? std::pair<Label, Label>{-1, 2} : std::pair<Label, Label>{2, -1};
    };
    if (n % 2 == 0) {
        a(n) = 2;
        a(n - 1) = a(n + 1) = 1;
        a(n - 2) = a(n + 2) = -1;
        b(n) = b(n - 1) = b(n + 1) = -1;
        b(n - 2) = b(n + 2) = 2;
        c(n) = 1;
        c(n - 1) = -1;
        c(n + 1) = 2;
        c(n - 2) = 2;
        c(n + 2) = 1;
        d(n) = 1;
        d(n - 1) = 2;
        d(n + 1) = -1;
        d(n - 2) = 1;
        d(n + 2) = 2;
        for (int j = 1; j <= n - 2; ++j) {
            auto [av, cdv] = periodic(j);
            a(n - 2 - j) = a(n + 2 + j) = av;
            b(n - 2 - j) = b(n + 2 + j) = 1;
            c(n - 2 - j) = c(n + 2 + j) = cdv;
            d(n - 2 - j) = d(n + 2 + j) = cdv;
        }
    } else {
        a(n) = 2;
        a(n - 1) = a(n + 1) = 1;
        b(n) = b(n - 1) = b(n + 1) = -1;
        c(n) = c(n - 1) = c(n + 1) = 1;
        d(n) = 1;
        d(n - 1) = d(n + 1) = 2;
        for (int j = 1; j <= n - 1; ++j) {
            auto [av, cdv] = periodic(j);
            a(n - 1 - j) = a(n + 1 + j) = av;
            b(n - 1 - j) = b(n + 1 + j) = 1;
            c(n - 1 - j) = c(n + 1 + j) = cdv;
            d(n - 1 - j) = d(n + 1 + j) = cdv;
        }
    }
    return f;
}

int expected_weight(const FamilySpec& spec) {
    const int n = spec.n;
    auto ceil_div = [](int a, int b) { return (a + b - 1) / b; };
    switch (spec.kind) {
        case Family::Complete: return n - 1;
        case Family::CompleteBipartite: return spec.p + n - 2;
        case Family::Star: return n;
        case Family::Wheel: return (n % 4 == 0) ? n / 2 + 1 : (n + 2) / 2 + 1;
        case Family::Path: return 2 * n / 3;
        case Family::Cycle: return ceil_div(2 * n, 3);
        case Family::Ladder: return ceil_div(6 * n, 5);
        case Family::Prism:
            return ceil_div(6 * n, 5) + ((n % 10 == 4 || n % 10 == 5) ? 1 : 0);
        case Family::Grid3: return 2 * n;
        case Family::FlowerSnark: return (n % 2 == 0) ? 5 * n + 3 : 5 * n + 4;
        case Family::ExplicitTree: break;
    }
    throw UnsupportedFamily("no closed-form weight for this family");
}

}  // namespace

ConstructionResult construct(const FamilySpec& spec) {
    check_params(spec);
    Labeling f;
    switch (spec.kind) {
        case Family::Complete: f = complete_labeling(spec.n); break;
        case Family::CompleteBipartite: f = bipartite_labeling(spec.p, spec.n); break;
        case Family::Star: f = star_labeling(spec.n); break;
        case Family::Wheel: f = wheel_labeling(spec.n); break;
        case Family::Path: f = path_labeling(spec.n); break;
        case Family::Cycle: f = cycle_labeling(spec.n); break;
        case Family::Ladder: f = ladder_labeling(spec.n); break;
        case Family::Prism: f = prism_labeling(spec.n); break;
        case Family::Grid3: f = grid3_labeling(spec.n); break;
        case Family::FlowerSnark: f = flower_snark_labeling(spec.n); break;
        case Family::ExplicitTree:
            throw UnsupportedFamily("explicit trees are labeled via tree_construction");
    }
    const int claimed = expected_weight(spec);
    const Graph g = generate(spec);
    // Fail fast: a pattern that does not validate or misses its stated
    // weight must never leave as a certificate.
    if (stats(f).weight != claimed)
        throw CertificateInvalid(describe(spec) + ": construction weight " +
                                 std::to_string(stats(f).weight) + " != stated " +
                                 std::to_string(claimed));
    ValidationReport report = validate(g, f);
    if (!report.ok()) {
        const Violation& v = report.violations.front();
        throw CertificateInvalid(describe(spec) + ": construction violates " +
                                 to_string(v.kind) + " at vertex " +
                                 std::to_string(v.vertices.front()));
    }
    return {std::move(f), claimed, spec};
}

BoundsRecord formula_value(const FamilySpec& spec) { return closed_form(spec); }

}  // namespace plsrd
