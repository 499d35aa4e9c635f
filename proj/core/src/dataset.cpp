#include "singwf/dataset.hpp"

#include "singwf/errors.hpp"
#include "singwf/parser.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#ifndef SINGWF_TABLES_DIR
#define SINGWF_TABLES_DIR "tables"
#endif

namespace singwf {

namespace {

constexpr std::array<std::string_view, 12> kKeys = {"id",   "source", "bind",  "poly", "tilde_poly", "tilde_weights",
                                                     "cone", "diff",   "indices", "notes", "vars",     "skip"};

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= s.size(); ++k) {
        if (k == s.size() || s[k] == sep) {
            out.push_back(trim(s.substr(start, k - start)));
            start = k + 1;
        }
    }
    return out;
}

[[noreturn]] void format_error(std::string_view origin, int line, const std::string& what) {
    throw Error(ErrorCode::FormatError, std::string(origin) + ":" + std::to_string(line) + ": " + what);
}

std::int64_t parse_int(std::string_view text, std::string_view origin, int line) {
    const std::string t = trim(text);
    if (t.empty()) format_error(origin, line, "expected an integer");
    std::size_t k = (t[0] == '-') ? 1 : 0;
    if (k == t.size()) format_error(origin, line, "expected an integer, got \"" + t + "\"");
    for (; k < t.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(t[k]))) format_error(origin, line, "expected an integer, got \"" + t + "\"");
    }
    return std::stoll(t);
}

std::vector<Weight> parse_int_list(std::string_view text, std::string_view origin, int line) {
    std::vector<Weight> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        for (const auto& piece : split(tok, ',')) {
            if (!piece.empty()) out.push_back(parse_int(piece, origin, line));
        }
    }
    return out;
}

// "n=7,9,11; i=0..5" -> list of bindings (cartesian product, in order).
std::vector<Bindings> parse_bind(std::string_view text, std::string_view origin, int line) {
    std::vector<Bindings> out{Bindings{}};
    for (const auto& clause : split(text, ';')) {
        if (clause.empty()) continue;
        const auto eq = clause.find('=');
        if (eq == std::string::npos) format_error(origin, line, "bind clause \"" + clause + "\" lacks '='");
        const std::string name = trim(std::string_view(clause).substr(0, eq));
        if (name.size() != 1 || !std::isalpha(static_cast<unsigned char>(name[0])))
            format_error(origin, line, "bind names are single letters, got \"" + name + "\"");
        std::vector<std::int64_t> values;
        for (const auto& item : split(std::string_view(clause).substr(eq + 1), ',')) {
            const auto dots = item.find("..");
            if (dots == std::string::npos) {
                values.push_back(parse_int(item, origin, line));
            } else {
                const auto lo = parse_int(std::string_view(item).substr(0, dots), origin, line);
                const auto hi = parse_int(std::string_view(item).substr(dots + 2), origin, line);
                if (hi < lo) format_error(origin, line, "empty range \"" + item + "\"");
                for (auto v = lo; v <= hi; ++v) values.push_back(v);
            }
        }
        std::vector<Bindings> next;
        for (const auto& b : out) {
            for (auto v : values) {
                Bindings nb = b;
                if (!nb.emplace(name, v).second) format_error(origin, line, "name \"" + name + "\" bound twice");
                next.push_back(std::move(nb));
            }
        }
        out = std::move(next);
    }
    return out;
}

std::string binding_suffix(const Bindings& b) {
    std::string s;
    for (const auto& [k, v] : b) {
        s += s.empty() ? "/" : ",";
        s += k + "=" + std::to_string(v);
    }
    return s;
}

BoundaryDivisor parse_diff(std::string_view text, std::size_t nvars, std::string_view origin, int line) {
    BoundaryDivisor div;
    const std::string t = trim(text);
    if (t.empty() || t == "0") return div;
    for (const auto& entry : split(t, ',')) {
        const auto colon = entry.find(':');
        if (colon == std::string::npos) format_error(origin, line, "diff entry \"" + entry + "\" is not Name:num/den");
        const StratumId s = parse_stratum_name(trim(std::string_view(entry).substr(0, colon)), nvars);
        Rational c;
        try {
            c = parse_rational(trim(std::string_view(entry).substr(colon + 1)));
        } catch (const Error&) {
            format_error(origin, line, "bad coefficient in diff entry \"" + entry + "\"");
        }
        div.add(s, c);
    }
    return div;
}

VarList parse_vars(std::string_view text, std::string_view origin, int line) {
    try {
        return VarList(split(text, ','));
    } catch (const Error& e) {
        format_error(origin, line, std::string("bad vars: ") + e.what());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::FormatError, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

const RawField* RawRecord::find(std::string_view key) const {
    for (const auto& f : fields) {
        if (f.key == key) return &f;
    }
    return nullptr;
}

std::vector<RawRecord> parse_record_text(std::string_view text, std::string_view origin) {
    std::vector<RawRecord> out;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;
        ++line_no;

        const std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        if (line == "[record]") {
            out.push_back(RawRecord{line_no, {}});
            continue;
        }
        if (out.empty()) format_error(origin, line_no, "field outside a [record] block");
        const auto eq = line.find('=');
        if (eq == std::string::npos) format_error(origin, line_no, "expected key=value");
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));
        if (std::find(kKeys.begin(), kKeys.end(), key) == kKeys.end()) format_error(origin, line_no, "unknown key \"" + key + "\"");
        if (out.back().find(key)) format_error(origin, line_no, "repeated key \"" + key + "\"");
        out.back().fields.push_back(RawField{std::move(key), std::move(value), line_no});
    }
    for (const auto& r : out) {
        for (const char* required : {"id", "poly"}) {
            if (!r.find(required)) format_error(origin, r.line, std::string("record lacks ") + required + "=");
        }
    }
    return out;
}

std::string render_records(const std::vector<RawRecord>& records) {
    std::string out;
    for (const auto& r : records) {
        out += "[record]\n";
        for (const auto& f : r.fields) out += f.key + "=" + f.value + "\n";
    }
    return out;
}

std::vector<TableRecord> expand_records(const std::vector<RawRecord>& raw, std::string_view origin) {
    std::vector<TableRecord> out;
    std::set<std::string> seen;

    for (const auto& r : raw) {
        auto value = [&](std::string_view key) -> std::string {
            const RawField* f = r.find(key);
            return f ? f->value : std::string();
        };
        auto line_of = [&](std::string_view key) {
            const RawField* f = r.find(key);
            return f ? f->line : r.line;
        };
        const std::string where = std::string(origin) + ":" + std::to_string(r.line);

        const std::vector<Bindings> bindings =
            r.find("bind") ? parse_bind(value("bind"), origin, line_of("bind")) : std::vector<Bindings>{Bindings{}};

        for (const auto& b : bindings) {
            auto instantiate = [&](std::string_view key) -> std::vector<std::string> {
                try {
                    return expand_alternatives(substitute_templates(value(key), b));
                } catch (const Error& e) {
                    format_error(origin, line_of(key), e.what());
                }
            };

            static constexpr std::array<std::string_view, 5> kAltKeys = {"poly", "tilde_poly", "tilde_weights",
                                                                          "cone", "diff"};
            std::map<std::string_view, std::vector<std::string>> alts;
            std::size_t count = 1;
            for (auto key : kAltKeys) {
                alts[key] = instantiate(key);
                count = std::max(count, alts[key].size());
            }
            for (auto key : kAltKeys) {
                if (alts[key].size() != 1 && alts[key].size() != count)
                    format_error(origin, line_of(key), "alternative count differs from other fields");
            }

            for (std::size_t a = 0; a < count; ++a) {
                auto pick = [&](std::string_view key) -> const std::string& {
                    const auto& v = alts[key];
                    return v.size() == 1 ? v.front() : v[a];
                };

                std::string id = value("id") + binding_suffix(b);
                if (count > 1) id += "/alt=" + std::to_string(a + 1);
                if (!seen.insert(id).second)
                    throw Error(ErrorCode::DuplicateId, where + ": duplicate record id \"" + id + "\"");

                const std::string poly_text = pick("poly");
                const VarList vars = r.find("vars") ? parse_vars(value("vars"), origin, line_of("vars"))
                                                    : guess_vars(poly_text);

                auto build_poly = [&](std::string_view key, const std::string& text) {
                    try {
                        return instantiate_generic_forms(text, vars);
                    } catch (const Error& e) {
                        if (e.code() == ErrorCode::InconsistentFamily) throw;
                        format_error(origin, line_of(key), std::string(key) + ": " + e.what());
                    }
                };

                Polynomial poly = build_poly("poly", poly_text);
                std::optional<Polynomial> tilde;
                if (r.find("tilde_poly")) tilde = build_poly("tilde_poly", pick("tilde_poly"));

                std::optional<std::string> skip;
                if (r.find("skip")) skip = value("skip");
                if (!skip) {
                    try {
                        (void)infer_weights(poly);
                    } catch (const Error& e) {
                        throw Error(ErrorCode::InconsistentFamily,
                                    where + ": record \"" + id + "\": representative " + render(poly) + ": " + e.what());
                    }
                }

                ConeExpectation cone = ConeExpectation::Unchecked;
                std::vector<Weight> cone_w;
                if (r.find("cone")) {
                    const std::string c = trim(pick("cone"));
                    if (c == "none") {
                        cone = ConeExpectation::Absent;
                    } else {
                        cone = ConeExpectation::Present;
                        cone_w = parse_int_list(c, origin, line_of("cone"));
                        if (cone_w.size() + 1 != vars.size())
                            format_error(origin, line_of("cone"), "cone needs " + std::to_string(vars.size() - 1) + " weights");
                    }
                }

                std::vector<Weight> tw = parse_int_list(pick("tilde_weights"), origin, line_of("tilde_weights"));
                if (!tw.empty() && tw.size() != vars.size())
                    format_error(origin, line_of("tilde_weights"), "tilde_weights needs " + std::to_string(vars.size()) + " entries");

                std::vector<int> indices;
                for (auto v : parse_int_list(value("indices"), origin, line_of("indices"))) indices.push_back(static_cast<int>(v));

                BoundaryDivisor diff;
                try {
                    diff = parse_diff(pick("diff"), vars.size(), origin, line_of("diff"));
                } catch (const Error& e) {
                    if (e.code() != ErrorCode::UnknownStratumName) throw;
                    throw Error(ErrorCode::UnknownStratumName,
                                std::string(origin) + ":" + std::to_string(line_of("diff")) + ": " + e.detail());
                }

                out.push_back(TableRecord{
                    .id = std::move(id),
                    .source = value("source") + binding_suffix(b),
                    .origin = where,
                    .poly_text = poly_text,
                    .poly = std::move(poly),
                    .expect_tilde_poly = std::move(tilde),
                    .expect_tilde_weights = std::move(tw),
                    .cone = cone,
                    .expect_cone = std::move(cone_w),
                    .expect_diff = std::move(diff),
                    .indices = std::move(indices),
                    .notes = value("notes"),
                    .skip = std::move(skip),
                });
            }
        }
    }
    return out;
}

std::vector<TableRecord> load_records_text(std::string_view text, std::string_view origin) {
    return expand_records(parse_record_text(text, origin), origin);
}

std::vector<TableRecord> load_records(const std::vector<std::filesystem::path>& paths) {
    std::vector<std::filesystem::path> files;
    for (const auto& p : paths) {
        if (std::filesystem::is_directory(p)) {
            std::vector<std::filesystem::path> found;
            for (const auto& entry : std::filesystem::directory_iterator(p)) {
                if (entry.is_regular_file() && entry.path().extension() == ".rec") found.push_back(entry.path());
            }
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        } else if (std::filesystem::exists(p)) {
            files.push_back(p);
        } else {
            throw Error(ErrorCode::FormatError, "no such file or directory: " + p.string());
        }
    }

    std::vector<TableRecord> out;
    std::set<std::string> seen;
    for (const auto& f : files) {
        auto recs = load_records_text(read_file(f), f.string());
        for (auto& r : recs) {
            if (!seen.insert(r.id).second)
                throw Error(ErrorCode::DuplicateId, r.origin + ": duplicate record id \"" + r.id + "\"");
            out.push_back(std::move(r));
        }
    }
    return out;
}

std::vector<TableRecord> load_records(const std::filesystem::path& path) {
    return load_records(std::vector<std::filesystem::path>{path});
}

std::filesystem::path default_tables_dir() {
    if (const char* env = std::getenv("SINGWF_TABLES"); env && *env) return env;
    return SINGWF_TABLES_DIR;
}

}  // namespace singwf
