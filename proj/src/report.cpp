#include "truncdist/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace truncdist {

namespace {

// n, m, q lead; everything else alphabetical.
int key_rank(const std::string& key) {
    if (key == "n") return 0;
    if (key == "m") return 1;
    if (key == "q") return 2;
    return 3;
}

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string field_to_string(const OutputRecord::Field& f) {
    switch (f.type) {
    case OutputRecord::Field::Type::integer: return f.int_value.str();
    case OutputRecord::Field::Type::real: return format_real(f.real_value);
    case OutputRecord::Field::Type::boolean: return f.bool_value ? "true" : "false";
    case OutputRecord::Field::Type::text: return f.text_value;
    }
    return {};
}

} // namespace

OutputFormat parse_output_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format: " + name);
}

void OutputRecord::add_int(const std::string& key, const BigInt& value) {
    Field f;
    f.key = key;
    f.type = Field::Type::integer;
    f.int_value = value;
    fields_.push_back(std::move(f));
}

void OutputRecord::add_real(const std::string& key, double value) {
    Field f;
    f.key = key;
    f.type = Field::Type::real;
    // snap to the printed 10-significant-digit value so every format agrees
    f.real_value = std::strtod(format_real(value).c_str(), nullptr);
    fields_.push_back(std::move(f));
}

void OutputRecord::add_bool(const std::string& key, bool value) {
    Field f;
    f.key = key;
    f.type = Field::Type::boolean;
    f.bool_value = value;
    fields_.push_back(std::move(f));
}

void OutputRecord::add_text(const std::string& key, const std::string& value) {
    Field f;
    f.key = key;
    f.type = Field::Type::text;
    f.text_value = value;
    fields_.push_back(std::move(f));
}

void OutputRecord::add_rational(const std::string& key, const Rational& value) {
    add_real(key, to_double(value));
    add_text(key + "_rational", boost::multiprecision::numerator(value).str() + "/" +
                                    boost::multiprecision::denominator(value).str());
}

std::vector<OutputRecord::Field> OutputRecord::ordered_fields() const {
    std::vector<Field> ordered = fields_;
    std::stable_sort(ordered.begin(), ordered.end(), [](const Field& a, const Field& b) {
        const int ra = key_rank(a.key);
        const int rb = key_rank(b.key);
        if (ra != rb) return ra < rb;
        return a.key < b.key;
    });
    return ordered;
}

std::string format_real(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", value);
    return buf;
}

std::string render_csv(const std::vector<OutputRecord>& records) {
    std::ostringstream out;
    bool header_done = false;
    for (const auto& record : records) {
        const auto fields = record.ordered_fields();
        if (!header_done) {
            for (std::size_t i = 0; i < fields.size(); ++i)
                out << (i ? "," : "") << csv_quote(fields[i].key);
            out << "\r\n";
            header_done = true;
        }
        for (std::size_t i = 0; i < fields.size(); ++i)
            out << (i ? "," : "") << csv_quote(field_to_string(fields[i]));
        out << "\r\n";
    }
    return out.str();
}

std::string render_json(const std::vector<OutputRecord>& records) {
    nlohmann::ordered_json doc;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& record : records) {
        nlohmann::ordered_json row = nlohmann::ordered_json::object();
        for (const auto& f : record.ordered_fields()) {
            switch (f.type) {
            case OutputRecord::Field::Type::integer:
                if (f.int_value >= BigInt(std::numeric_limits<std::int64_t>::min()) &&
                    f.int_value <= BigInt(std::numeric_limits<std::int64_t>::max()))
                    row[f.key] = static_cast<std::int64_t>(f.int_value);
                else
                    row[f.key] = f.int_value.str();
                break;
            case OutputRecord::Field::Type::real:
                // JSON has no inf/nan literals; fall back to the printed form
                if (std::isfinite(f.real_value))
                    row[f.key] = f.real_value;
                else
                    row[f.key] = format_real(f.real_value);
                break;
            case OutputRecord::Field::Type::boolean: row[f.key] = f.bool_value; break;
            case OutputRecord::Field::Type::text: row[f.key] = f.text_value; break;
            }
        }
        doc["rows"].push_back(std::move(row));
    }
    return doc.dump(2) + "\n";
}

std::string render_table(const std::vector<OutputRecord>& records) {
    if (records.empty()) return "";
    std::vector<std::string> keys;
    for (const auto& f : records.front().ordered_fields()) keys.push_back(f.key);

    std::vector<std::vector<std::string>> cells;
    for (const auto& record : records) {
        std::vector<std::string> row;
        for (const auto& f : record.ordered_fields()) row.push_back(field_to_string(f));
        cells.push_back(std::move(row));
    }

    std::vector<std::size_t> widths;
    for (std::size_t c = 0; c < keys.size(); ++c) {
        std::size_t w = keys[c].size();
        for (const auto& row : cells) w = std::max(w, row[c].size());
        widths.push_back(w);
    }

    std::ostringstream out;
    for (std::size_t c = 0; c < keys.size(); ++c) {
        out << (c ? "  " : "");
        out << keys[c] << std::string(widths[c] - keys[c].size(), ' ');
    }
    out << "\n";
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "  " : "");
            out << row[c] << std::string(widths[c] - row[c].size(), ' ');
        }
        out << "\n";
    }
    return out.str();
}

std::string render(const std::vector<OutputRecord>& records, OutputFormat format) {
    switch (format) {
    case OutputFormat::table: return render_table(records);
    case OutputFormat::csv: return render_csv(records);
    case OutputFormat::json: return render_json(records);
    }
    return {};
}

BigInt parse_bigint(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer");
    const auto caret = text.find('^');
    try {
        if (caret != std::string::npos) {
            const BigInt base(text.substr(0, caret));
            const int exponent = std::stoi(text.substr(caret + 1));
            if (base != 2 || exponent < 0 || exponent > 100000)
                throw std::invalid_argument("only 2^k with k >= 0 is supported");
            return BigInt(1) << static_cast<unsigned>(exponent);
        }
        return BigInt(text);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("cannot parse integer: " + text);
    }
}

std::vector<BigInt> make_q_grid(const BigInt& q_min, const BigInt& q_max, int points,
                                bool log_scale) {
    if (points < 1) throw std::invalid_argument("points must be >= 1");
    if (q_min > q_max) throw std::invalid_argument("q-min exceeds q-max");
    if (log_scale && q_min < 1)
        throw std::invalid_argument("log-scale grid requires q-min >= 1");

    std::vector<BigInt> grid;
    if (points == 1 || q_min == q_max) {
        grid.push_back(q_min);
        return grid;
    }
    for (int i = 0; i < points; ++i) {
        const Quad frac = Quad(i) / (points - 1);
        BigInt q;
        if (log_scale) {
            const Quad lo = log2_bigint(q_min);
            const Quad hi = log2_bigint(q_max);
            const Quad value = exp(log(Quad(2)) * (lo + (hi - lo) * frac));
            q = BigInt(round(value));
        } else {
            q = q_min + BigInt(round(Quad(q_max - q_min) * frac));
        }
        q = std::clamp(q, q_min, q_max);
        if (grid.empty() || grid.back() != q) grid.push_back(q);
    }
    return grid;
}

} // namespace truncdist
