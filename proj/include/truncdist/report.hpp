#pragma once

#include <string>
#include <vector>

#include "truncdist/numeric.hpp"

namespace truncdist {

enum class OutputFormat { table, csv, json };

OutputFormat parse_output_format(const std::string& name);

/// One flat result row. Keys are stable across versions; rendering orders
/// them n, m, q first, then alphabetically. Doubles are carried at 10
/// significant digits; exact rationals appear twice, as a decimal under
/// their own key and as "num/den" under <key>_rational.
class OutputRecord {
public:
    void add_int(const std::string& key, const BigInt& value);
    void add_real(const std::string& key, double value);
    void add_bool(const std::string& key, bool value);
    void add_text(const std::string& key, const std::string& value);
    void add_rational(const std::string& key, const Rational& value);

    struct Field {
        enum class Type { integer, real, boolean, text };
        std::string key;
        Type type;
        BigInt int_value;
        double real_value = 0.0;
        bool bool_value = false;
        std::string text_value;
    };

    /// Fields in canonical emission order.
    std::vector<Field> ordered_fields() const;

private:
    std::vector<Field> fields_;
};

/// Decimal with 10 significant digits.
std::string format_real(double value);

std::string render_csv(const std::vector<OutputRecord>& records);
std::string render_json(const std::vector<OutputRecord>& records);
std::string render_table(const std::vector<OutputRecord>& records);
std::string render(const std::vector<OutputRecord>& records, OutputFormat format);

/// Accepts plain decimal ("16384") or power-of-two ("2^14") notation.
BigInt parse_bigint(const std::string& text);

/// Inclusive [q_min, q_max] grid with `points` entries, linear or geometric,
/// rounded to integers and deduplicated.
std::vector<BigInt> make_q_grid(const BigInt& q_min, const BigInt& q_max, int points,
                                bool log_scale);

} // namespace truncdist
