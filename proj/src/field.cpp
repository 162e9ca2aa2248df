#include "landau/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "landau/errors.hpp"
#include "landau/rng.hpp"

namespace landau {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

int component_index(field_component c) { return c == field_component::E1 ? 0 : 1; }

// --- canonical-serialization hashing (FNV-1a, 64-bit) ---

struct fnv1a {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    void bytes(const void* p, std::size_t n) {
        auto* b = static_cast<const unsigned char*>(p);
        for (std::size_t i = 0; i < n; ++i) {
            h ^= b[i];
            h *= 0x100000001b3ULL;
        }
    }
    void text(const char* s) { bytes(s, std::char_traits<char>::length(s)); }
    void num(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g;", v);
        text(buf);
    }
    void num(std::uint64_t v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%llu;", static_cast<unsigned long long>(v));
        text(buf);
    }
};

}  // namespace

// --- sampled tables ---

sampled_field sampled_field::from_rows(std::vector<row> rows) {
    if (rows.empty()) throw std::invalid_argument("sampled field: table has no rows");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const row& r = rows[i];
        if (!std::isfinite(r.t) || !std::isfinite(r.e1) || !std::isfinite(r.e2))
            throw std::invalid_argument("sampled field: non-finite entry in row " +
                                        std::to_string(i + 1));
        if (i > 0 && !(rows[i - 1].t < r.t))
            throw std::invalid_argument("sampled field: times must be strictly increasing (row " +
                                        std::to_string(i + 1) + ")");
    }
    sampled_field f;
    f.rows = std::move(rows);
    return f;
}

std::array<double, 2> sampled_field::eval(double t) const {
    if (t < rows.front().t || t > rows.back().t) return {0.0, 0.0};
    auto it = std::lower_bound(rows.begin(), rows.end(), t,
                               [](const row& r, double v) { return r.t < v; });
    if (it->t == t) return {it->e1, it->e2};
    const row& hi = *it;
    const row& lo = *(it - 1);
    double w = (t - lo.t) / (hi.t - lo.t);
    return {lo.e1 + w * (hi.e1 - lo.e1), lo.e2 + w * (hi.e2 - lo.e2)};
}

sampled_field parse_sampled_field(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<sampled_field::row> rows;
    bool header_seen = false;
    auto fail = [&](const std::string& msg) -> void {
        throw parse_error(origin + ": " + msg, line_no);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string trimmed = line;
        trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(),
                                     [](unsigned char ch) { return std::isspace(ch); }),
                      trimmed.end());
        if (trimmed.empty()) continue;
        if (!header_seen) {
            if (trimmed != "t,E1,E2") fail("expected header \"t,E1,E2\", got \"" + line + "\"");
            header_seen = true;
            continue;
        }
        double vals[3];
        std::size_t field = 0, pos = 0;
        while (field < 3) {
            std::size_t comma = trimmed.find(',', pos);
            std::string cell = trimmed.substr(pos, comma == std::string::npos ? comma : comma - pos);
            if (cell.empty()) fail("empty value in column " + std::to_string(field + 1));
            char* end = nullptr;
            vals[field] = std::strtod(cell.c_str(), &end);
            if (end != cell.c_str() + cell.size())
                fail("cannot parse number \"" + cell + "\"");
            ++field;
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (field != 3 || trimmed.find(',', pos) != std::string::npos)
            fail("expected exactly 3 comma-separated values");
        rows.push_back({vals[0], vals[1], vals[2]});
    }
    if (!header_seen) throw parse_error(origin + ": empty table", line_no);
    try {
        return sampled_field::from_rows(std::move(rows));
    } catch (const std::invalid_argument& e) {
        throw config_error(origin + ": " + e.what());
    }
}

sampled_field load_sampled_field(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open sampled field table: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_sampled_field(buf.str(), path);
}

// --- field_spec ---

field_spec::field_spec(double t_start, double t_end, std::vector<field_primitive> primitives)
    : t0_(t_start), t1_(t_end), prims_(std::move(primitives)) {
    validate_and_draw();
}

void field_spec::validate_and_draw() {
    require_finite(t0_, "t_start");
    require_finite(t1_, "t_end");
    if (!(t0_ < t1_)) throw std::invalid_argument("field window must have t_start < t_end");
    noise_cells_.assign(prims_.size(), {});
    noise_edges_.assign(prims_.size(), {});
    for (std::size_t i = 0; i < prims_.size(); ++i) {
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, constant_signal>) {
                    require_finite(p.amplitude, "constant amplitude");
                } else if constexpr (std::is_same_v<T, sinusoid_signal>) {
                    require_finite(p.amplitude, "sinusoid amplitude");
                    require_finite(p.angular_frequency, "sinusoid angular_frequency");
                    require_finite(p.phase, "sinusoid phase");
                    double a = p.from.value_or(t0_), b = p.to.value_or(t1_);
                    require_finite(a, "sinusoid sub-window");
                    require_finite(b, "sinusoid sub-window");
                    if (!(a < b))
                        throw std::invalid_argument("sinusoid sub-window must be ordered");
                } else if constexpr (std::is_same_v<T, gaussian_pulse_signal>) {
                    require_finite(p.amplitude, "pulse amplitude");
                    require_finite(p.center, "pulse center");
                    require_finite(p.carrier_angular_frequency, "pulse carrier frequency");
                    require_finite(p.carrier_phase, "pulse carrier phase");
                    if (!std::isfinite(p.width) || p.width <= 0.0)
                        throw std::invalid_argument("pulse width must be positive");
                } else if constexpr (std::is_same_v<T, square_pulse_signal>) {
                    require_finite(p.amplitude, "square amplitude");
                    require_finite(p.from, "square sub-window");
                    require_finite(p.to, "square sub-window");
                    if (!(p.from < p.to))
                        throw std::invalid_argument("square sub-window must be ordered");
                } else if constexpr (std::is_same_v<T, white_noise_signal>) {
                    require_finite(p.amplitude, "noise amplitude");
                    if (!std::isfinite(p.sample_step) || p.sample_step <= 0.0)
                        throw std::invalid_argument("noise sample_step must be positive");
                    auto n_cells = static_cast<std::size_t>(
                        std::ceil((t1_ - t0_) / p.sample_step - 1e-12));
                    if (n_cells == 0) n_cells = 1;
                    xorshift64star gen(p.seed);
                    auto& cells = noise_cells_[i];
                    cells.resize(n_cells);
                    for (auto& c : cells) c = gen.next_symmetric(p.amplitude);
                    auto& edges = noise_edges_[i];
                    edges.resize(n_cells + 1);
                    for (std::size_t j = 0; j <= n_cells; ++j)
                        edges[j] = t0_ + static_cast<double>(j) * p.sample_step;
                    edges.back() = std::max(edges.back(), t1_);
                } else if constexpr (std::is_same_v<T, sampled_signal>) {
                    if (p.table.rows.empty())
                        throw std::invalid_argument("sampled primitive holds an empty table");
                }
            },
            prims_[i]);
    }
}

std::array<double, 2> field_spec::eval(double t) const {
    if (!(t >= t0_ && t <= t1_)) return {0.0, 0.0};  // exact compact support
    double e[2] = {0.0, 0.0};
    for (std::size_t i = 0; i < prims_.size(); ++i) {
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, constant_signal>) {
                    e[component_index(p.target)] += p.amplitude;
                } else if constexpr (std::is_same_v<T, sinusoid_signal>) {
                    double a = p.from.value_or(t0_), b = p.to.value_or(t1_);
                    if (t >= a && t <= b)
                        e[component_index(p.target)] +=
                            p.amplitude * std::cos(p.angular_frequency * t + p.phase);
                } else if constexpr (std::is_same_v<T, gaussian_pulse_signal>) {
                    double d = t - p.center;
                    e[component_index(p.target)] +=
                        p.amplitude * std::exp(-d * d / (2.0 * p.width * p.width)) *
                        std::cos(p.carrier_angular_frequency * d + p.carrier_phase);
                } else if constexpr (std::is_same_v<T, square_pulse_signal>) {
                    if (t >= p.from && t <= p.to) e[component_index(p.target)] += p.amplitude;
                } else if constexpr (std::is_same_v<T, white_noise_signal>) {
                    const auto& cells = noise_cells_[i];
                    const auto& edges = noise_edges_[i];
                    // half-open cells on the exact edge doubles; never
                    // floor-divide, or boundary times land in the wrong cell
                    auto it = std::upper_bound(edges.begin(), edges.end(), t);
                    long j = static_cast<long>(it - edges.begin()) - 1;
                    if (j < 0) j = 0;
                    if (j >= static_cast<long>(cells.size()))
                        j = static_cast<long>(cells.size()) - 1;
                    e[component_index(p.target)] += cells[static_cast<std::size_t>(j)];
                } else if constexpr (std::is_same_v<T, sampled_signal>) {
                    auto v = p.table.eval(t);
                    e[0] += v[0];
                    e[1] += v[1];
                }
            },
            prims_[i]);
    }
    return {e[0], e[1]};
}

std::vector<double> field_spec::breakpoints() const {
    std::vector<double> pts{t0_, t1_};
    auto push = [&](double t) {
        if (t > t0_ && t < t1_) pts.push_back(t);
    };
    for (std::size_t i = 0; i < prims_.size(); ++i) {
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                if constexpr (std::is_same_v<T, sinusoid_signal>) {
                    if (p.from) push(*p.from);
                    if (p.to) push(*p.to);
                } else if constexpr (std::is_same_v<T, square_pulse_signal>) {
                    push(p.from);
                    push(p.to);
                } else if constexpr (std::is_same_v<T, white_noise_signal>) {
                    for (std::size_t j = 1; j < noise_cells_[i].size(); ++j)
                        push(noise_edges_[i][j]);
                } else if constexpr (std::is_same_v<T, sampled_signal>) {
                    for (const auto& r : p.table.rows) push(r.t);
                }
            },
            prims_[i]);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

double field_spec::fastest_timescale() const {
    double ts = inf;
    auto consider = [&](double v) {
        if (v > 0.0 && v < ts) ts = v;
    };
    for (const auto& prim : prims_) {
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                constexpr double two_pi = 6.283185307179586476925;
                if constexpr (std::is_same_v<T, sinusoid_signal>) {
                    if (p.angular_frequency != 0.0)
                        consider(two_pi / std::fabs(p.angular_frequency));
                } else if constexpr (std::is_same_v<T, gaussian_pulse_signal>) {
                    consider(p.width);
                    if (p.carrier_angular_frequency != 0.0)
                        consider(two_pi / std::fabs(p.carrier_angular_frequency));
                } else if constexpr (std::is_same_v<T, square_pulse_signal>) {
                    consider(p.to - p.from);
                } else if constexpr (std::is_same_v<T, white_noise_signal>) {
                    consider(p.sample_step);
                } else if constexpr (std::is_same_v<T, sampled_signal>) {
                    for (std::size_t j = 1; j < p.table.rows.size(); ++j)
                        consider(p.table.rows[j].t - p.table.rows[j - 1].t);
                }
            },
            prim);
    }
    return ts;
}

bool field_spec::has_sampled() const {
    for (const auto& p : prims_)
        if (std::holds_alternative<sampled_signal>(p)) return true;
    return false;
}

field_spec field_spec::with_noise_seed(std::uint64_t seed) const {
    std::vector<field_primitive> prims = prims_;
    for (auto& p : prims)
        if (auto* w = std::get_if<white_noise_signal>(&p)) w->seed = seed;
    return field_spec(t0_, t1_, std::move(prims));
}

std::uint64_t field_spec::content_hash() const {
    fnv1a h;
    h.text("window:");
    h.num(t0_);
    h.num(t1_);
    for (const auto& prim : prims_) {
        std::visit(
            [&](const auto& p) {
                using T = std::decay_t<decltype(p)>;
                auto tgt = [&](field_component c) { h.text(c == field_component::E1 ? "E1:" : "E2:"); };
                if constexpr (std::is_same_v<T, constant_signal>) {
                    h.text("constant:");
                    tgt(p.target);
                    h.num(p.amplitude);
                } else if constexpr (std::is_same_v<T, sinusoid_signal>) {
                    h.text("sinusoid:");
                    tgt(p.target);
                    h.num(p.amplitude);
                    h.num(p.angular_frequency);
                    h.num(p.phase);
                    h.num(p.from.value_or(t0_));
                    h.num(p.to.value_or(t1_));
                } else if constexpr (std::is_same_v<T, gaussian_pulse_signal>) {
                    h.text("gaussian:");
                    tgt(p.target);
                    h.num(p.amplitude);
                    h.num(p.center);
                    h.num(p.width);
                    h.num(p.carrier_angular_frequency);
                    h.num(p.carrier_phase);
                } else if constexpr (std::is_same_v<T, square_pulse_signal>) {
                    h.text("square:");
                    tgt(p.target);
                    h.num(p.amplitude);
                    h.num(p.from);
                    h.num(p.to);
                } else if constexpr (std::is_same_v<T, white_noise_signal>) {
                    h.text("noise:");
                    tgt(p.target);
                    h.num(p.amplitude);
                    h.num(p.sample_step);
                    h.num(p.seed);
                } else if constexpr (std::is_same_v<T, sampled_signal>) {
                    h.text("sampled:");
                    for (const auto& r : p.table.rows) {
                        h.num(r.t);
                        h.num(r.e1);
                        h.num(r.e2);
                    }
                }
            },
            prim);
    }
    return h.h;
}

}  // namespace landau
