#include "linkpred/trace.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <string_view>
#include <unordered_map>

namespace linkpred {

namespace {

struct Interner {
    std::unordered_map<std::string, int> index;
    std::vector<std::string> names;

    int intern(std::string_view name) {
        auto it = index.find(std::string(name));
        if (it != index.end()) return it->second;
        const int id = static_cast<int>(names.size());
        names.emplace_back(name);
        index.emplace(names.back(), id);
        return id;
    }
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

bool parse_seconds(std::string_view field, double& out) {
    field = trim(field);
    if (field.empty()) return false;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last && std::isfinite(out);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = line.find(',', begin);
        if (comma == std::string_view::npos) {
            fields.push_back(line.substr(begin));
            break;
        }
        fields.push_back(line.substr(begin, comma - begin));
        begin = comma + 1;
    }
    return fields;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& why) {
    throw DataError("line " + std::to_string(line_no) + ": " + why);
}

// Shared CSV walk for both trace formats: calls on_record(fields, line_no)
// for every data line. The first content line is skipped as a header when
// its third field is not a number.
template <typename OnRecord>
void for_each_record(std::istream& in, OnRecord&& on_record) {
    std::string line;
    std::size_t line_no = 0;
    bool seen_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::string_view view = line;
        if (trim(view).empty() || trim(view).front() == '#') continue;
        const auto fields = split_fields(view);
        if (!seen_content) {
            seen_content = true;
            double ignored;
            if (fields.size() >= 3 && !parse_seconds(fields[2], ignored)) {
                continue; // header row
            }
        }
        if (fields.size() != 4) {
            malformed(line_no, "expected 4 comma-separated fields, got " +
                                   std::to_string(fields.size()));
        }
        on_record(fields, line_no);
    }
}

void parse_interval(std::string_view start_field, std::string_view end_field, std::size_t line_no,
                    double& start, double& end) {
    if (!parse_seconds(start_field, start)) malformed(line_no, "unparsable start time");
    if (!parse_seconds(end_field, end)) malformed(line_no, "unparsable end time");
    if (start < 0 || end < 0) malformed(line_no, "negative time");
    if (start > end) malformed(line_no, "start after end");
}

struct Interval {
    double start;
    double end;
};

// Sorts and merges overlapping or touching half-open intervals in place.
void merge_intervals(std::vector<Interval>& intervals) {
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval& a, const Interval& b) { return a.start < b.start; });
    std::vector<Interval> merged;
    for (const Interval& iv : intervals) {
        if (!merged.empty() && iv.start <= merged.back().end) {
            merged.back().end = std::max(merged.back().end, iv.end);
        } else {
            merged.push_back(iv);
        }
    }
    intervals = std::move(merged);
}

std::vector<Interval> intersect(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    std::vector<Interval> out;
    std::size_t ia = 0, ib = 0;
    while (ia < a.size() && ib < b.size()) {
        const double lo = std::max(a[ia].start, b[ib].start);
        const double hi = std::min(a[ia].end, b[ib].end);
        if (lo < hi) out.push_back({lo, hi});
        if (a[ia].end < b[ib].end) {
            ++ia;
        } else {
            ++ib;
        }
    }
    return out;
}

double uniform01(std::mt19937_64& eng) {
    // 53-bit mantissa draw; identical across standard library implementations.
    return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

} // namespace

ContactTrace parse_contact_trace(std::istream& in) {
    ContactTrace trace;
    Interner nodes;
    for_each_record(in, [&](const std::vector<std::string_view>& fields, std::size_t line_no) {
        const std::string_view name_a = fields[0];
        const std::string_view name_b = fields[1];
        if (name_a == name_b) malformed(line_no, "contact requires two distinct nodes");
        double start, end;
        parse_interval(fields[2], fields[3], line_no, start, end);
        const int a = nodes.intern(name_a);
        const int b = nodes.intern(name_b);
        trace.events.push_back({a, b, start, end});
    });
    trace.node_names = std::move(nodes.names);
    return trace;
}

AssociationTrace parse_association_trace(std::istream& in) {
    AssociationTrace trace;
    Interner nodes;
    Interner locations;
    for_each_record(in, [&](const std::vector<std::string_view>& fields, std::size_t line_no) {
        double start, end;
        parse_interval(fields[2], fields[3], line_no, start, end);
        const int node = nodes.intern(fields[0]);
        const int location = locations.intern(fields[1]);
        trace.events.push_back({node, location, start, end});
    });
    trace.node_names = std::move(nodes.names);
    trace.location_names = std::move(locations.names);
    return trace;
}

std::vector<ContactEvent> associations_to_contacts(const std::vector<AssociationEvent>& events) {
    // location -> node -> merged association intervals
    std::map<int, std::map<int, std::vector<Interval>>> by_location;
    for (const AssociationEvent& ev : events) {
        if (ev.start > ev.end) throw DataError("association event with start after end");
        by_location[ev.location][ev.node].push_back({ev.start, ev.end});
    }
    std::map<std::pair<int, int>, std::vector<Interval>> by_pair;
    for (auto& [location, per_node] : by_location) {
        for (auto& [node, intervals] : per_node) {
            merge_intervals(intervals);
        }
        for (auto ita = per_node.begin(); ita != per_node.end(); ++ita) {
            for (auto itb = std::next(ita); itb != per_node.end(); ++itb) {
                auto shared = intersect(ita->second, itb->second);
                auto& sink = by_pair[{ita->first, itb->first}];
                sink.insert(sink.end(), shared.begin(), shared.end());
            }
        }
    }
    std::vector<ContactEvent> contacts;
    for (auto& [pair, intervals] : by_pair) {
        merge_intervals(intervals);
        for (const Interval& iv : intervals) {
            if (iv.end > iv.start) {
                contacts.push_back({pair.first, pair.second, iv.start, iv.end});
            }
        }
    }
    std::sort(contacts.begin(), contacts.end(), [](const ContactEvent& a, const ContactEvent& b) {
        return std::tie(a.node_a, a.node_b, a.start) < std::tie(b.node_a, b.node_b, b.start);
    });
    return contacts;
}

int DiscretizationConfig::period_count() const {
    if (period_length <= 0) {
        throw ConfigError("period_length must be positive");
    }
    if (window_end <= window_start) {
        throw ConfigError("window_end must be after window_start");
    }
    const double span = window_end - window_start;
    const double ratio = span / period_length;
    const long long periods = std::llround(ratio);
    if (periods < 1 || std::abs(static_cast<double>(periods) * period_length - span) >
                           1e-9 * std::max(1.0, span)) {
        throw ConfigError("window length is not an integer multiple of period_length");
    }
    return static_cast<int>(periods);
}

ContactTensor discretize(const std::vector<ContactEvent>& events,
                         const DiscretizationConfig& config) {
    const int periods = config.period_count();
    int node_count = config.node_count.value_or(0);
    if (!config.node_count) {
        for (const ContactEvent& ev : events) {
            node_count = std::max({node_count, ev.node_a + 1, ev.node_b + 1});
        }
        if (node_count == 0) {
            throw DataError("empty node universe: no events and no explicit node count");
        }
    }
    ContactTensor tensor(node_count, periods);
    const double ws = config.window_start;
    const double t = config.period_length;
    for (const ContactEvent& ev : events) {
        if (ev.start > ev.end) throw DataError("contact event with start after end");
        if (ev.node_a == ev.node_b) throw DataError("contact event connecting a node to itself");
        if (ev.node_a >= node_count || ev.node_b >= node_count || ev.node_a < 0 || ev.node_b < 0) {
            throw DataError("contact event node outside the node universe");
        }
        const double start = std::max(ev.start, ws);
        const double end = std::min(ev.end, config.window_end);
        if (start >= end) continue;
        int p_lo = static_cast<int>(std::floor((start - ws) / t));
        int p_hi = static_cast<int>(std::floor((end - ws) / t));
        p_lo = std::clamp(p_lo, 0, periods - 1);
        p_hi = std::clamp(p_hi, 0, periods - 1);
        for (int p = p_lo; p <= p_hi; ++p) {
            const double period_start = ws + p * t;
            const double period_end = ws + (p + 1) * t;
            if (std::max(start, period_start) < std::min(end, period_end)) {
                tensor.set_link(p, ev.node_a, ev.node_b);
            }
        }
    }
    return tensor;
}

ContactTensor generate_synthetic(const SyntheticSpec& spec, std::uint64_t seed) {
    if (spec.node_count < 1) throw ConfigError("synthetic spec requires at least one node");
    if (spec.period_count < 1) throw ConfigError("synthetic spec requires at least one period");
    for (double p : {spec.p_stable, spec.flip_prob, spec.p_noise}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ConfigError("synthetic probabilities must lie in [0, 1]");
        }
    }
    std::set<std::pair<int, int>> stable;
    for (auto [i, j] : spec.stable_pairs) {
        if (i == j || i < 0 || j < 0 || i >= spec.node_count || j >= spec.node_count) {
            throw ConfigError("invalid stable pair (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
        }
        if (i > j) std::swap(i, j);
        if (!stable.insert({i, j}).second) {
            throw ConfigError("duplicate stable pair (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
        }
    }

    ContactTensor tensor(spec.node_count, spec.period_count);
    std::mt19937_64 eng(seed);

    // Stable pairs first, in the listed order, then noise pairs in pair-index
    // order; a fixed consumption pattern keeps output reproducible.
    for (auto [i, j] : spec.stable_pairs) {
        bool on = uniform01(eng) < spec.p_stable;
        for (int p = 0; p < spec.period_count; ++p) {
            if (p > 0 && uniform01(eng) < spec.flip_prob) on = !on;
            if (on) tensor.set_link(p, i, j);
        }
    }
    if (spec.p_noise > 0.0) {
        for (int i = 0; i < spec.node_count; ++i) {
            for (int j = i + 1; j < spec.node_count; ++j) {
                if (stable.count({i, j})) continue;
                for (int p = 0; p < spec.period_count; ++p) {
                    if (uniform01(eng) < spec.p_noise) tensor.set_link(p, i, j);
                }
            }
        }
    }
    return tensor;
}

std::vector<std::pair<int, int>> pick_random_pairs(int node_count, int count, std::uint64_t seed) {
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < node_count; ++i) {
        for (int j = i + 1; j < node_count; ++j) all.emplace_back(i, j);
    }
    if (count < 0 || count > static_cast<int>(all.size())) {
        throw ConfigError("cannot pick " + std::to_string(count) + " pairs from " +
                          std::to_string(all.size()));
    }
    std::mt19937_64 eng(seed);
    for (std::size_t k = all.size() - 1; k > 0; --k) {
        const std::size_t swap_with = static_cast<std::size_t>(eng() % (k + 1));
        std::swap(all[k], all[swap_with]);
    }
    all.resize(static_cast<std::size_t>(count));
    std::sort(all.begin(), all.end());
    return all;
}

std::vector<ContactEvent> tensor_to_events(const ContactTensor& tensor, double period_length,
                                           double window_start) {
    if (period_length <= 0) throw ConfigError("period_length must be positive");
    std::vector<ContactEvent> events;
    for (int i = 0; i < tensor.node_count(); ++i) {
        for (int j = i + 1; j < tensor.node_count(); ++j) {
            for (int p = 0; p < tensor.period_count(); ++p) {
                if (tensor.link(p, i, j)) {
                    events.push_back({i, j, window_start + p * period_length,
                                      window_start + (p + 1) * period_length});
                }
            }
        }
    }
    return events;
}

void write_contact_csv(std::ostream& out, const std::vector<ContactEvent>& events,
                       int node_count, const std::vector<std::string>& node_names) {
    auto name_of = [&](int id) {
        if (id < static_cast<int>(node_names.size())) return node_names[static_cast<std::size_t>(id)];
        return "n" + std::to_string(id);
    };
    auto seconds = [](double value) {
        std::array<char, 32> buf;
        std::snprintf(buf.data(), buf.size(), "%.17g", value);
        return std::string(buf.data());
    };
    out << "node_a,node_b,start,end\n";
    if (events.empty()) return;

    // Zero-length declaration events pin the node universe and the interning
    // order, so parse + discretize reproduces the source tensor exactly.
    int max_node = node_count - 1;
    for (const ContactEvent& ev : events) {
        max_node = std::max({max_node, ev.node_a, ev.node_b});
    }
    const double anchor = events.front().start;
    for (int i = 0; i + 1 <= max_node; ++i) {
        out << name_of(i) << ',' << name_of(i + 1) << ',' << seconds(anchor) << ','
            << seconds(anchor) << '\n';
    }
    for (const ContactEvent& ev : events) {
        out << name_of(ev.node_a) << ',' << name_of(ev.node_b) << ',' << seconds(ev.start) << ','
            << seconds(ev.end) << '\n';
    }
}

} // namespace linkpred
