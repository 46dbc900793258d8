#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bisphere {

// One entry of the universal-constant table.
struct ConstantEntry {
    std::string label;
    double computed = 0.0;
    std::optional<double> paper_value;
    double abs_err = 0.0;       // |computed - paper_value| when a paper value exists
    double paper_tol = 5e-6;    // print-precision tolerance for the comparison
    bool anomalous = false;     // |computed - paper| > paper_tol
    bool known_anomalous = false;  // documented irreproducible printed value
    bool aggregate = false;     // K-type (sum of C parts)
    // informational: nearest small rational p/q (q <= 48) within 5e-6, if any
    std::optional<std::pair<long, long>> rational_hint;
};

class ConstantTable {
  public:
    const ConstantEntry& at(const std::string& label) const;
    bool contains(const std::string& label) const { return entries_.count(label) != 0; }
    // Value used by the closed forms: the printed value when one exists,
    // otherwise the computed one.
    double resolve(const std::string& label) const;
    void insert(ConstantEntry e) { entries_[e.label] = std::move(e); }
    const std::map<std::string, ConstantEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    // Table holding only the published values (no quadrature).
    static ConstantTable paper_defaults();

  private:
    std::map<std::string, ConstantEntry> entries_;
};

// Evaluate one registered constant by adaptive quadrature of its
// counterterm-subtracted integrand.
double eval_constant(const std::string& label, double abs_tol = 1e-9);

// Evaluate every registered constant and aggregate, attach paper values,
// flag discrepancies.  Parallel across entries.
ConstantTable build_constant_table(double abs_tol = 1e-9);

// Introspection used by the tests and the CLI.
std::vector<std::string> registered_constant_labels();   // C entries
std::vector<std::string> registered_aggregate_labels();  // K entries
std::vector<std::string> registered_kernel_names();

// Kernel evaluation (exact formula; no counterterm subtraction).
double kernel_value(const std::string& kernel_name, double m);

// Counterterm-subtracted integrand of a constant, with the Maclaurin branch
// below the cancellation switch point.
double subtracted_integrand(const std::string& label, double m);
double maclaurin_switch_point();

}  // namespace bisphere
