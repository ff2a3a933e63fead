#pragma once

// Mamdani fuzzy inference: membership functions, linguistic variables,
// AND/OR/NOT rules, min implication, max aggregation and centroid
// defuzzification over a sampled output universe.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace closet::fuzzy {

struct Gaussian {
  double center = 0.0;
  double sigma = 1.0;
  friend bool operator==(const Gaussian&, const Gaussian&) = default;
};

struct Triangular {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  friend bool operator==(const Triangular&, const Triangular&) = default;
};

class MembershipFunction {
 public:
  using Shape = std::variant<Gaussian, Triangular>;

  /// Throws ConfigError unless sigma > 0 and both are finite.
  static MembershipFunction gaussian(double center, double sigma);
  /// Throws ConfigError unless a <= b <= c and a < c.
  static MembershipFunction triangular(double a, double b, double c);

  /// Membership degree in [0,1]. Total over all real x.
  double operator()(double x) const;

  const Shape& shape() const { return shape_; }

  friend bool operator==(const MembershipFunction&, const MembershipFunction&) = default;

 private:
  explicit MembershipFunction(Shape shape) : shape_(shape) {}
  Shape shape_;
};

inline double eval_mf(const MembershipFunction& mf, double x) { return mf(x); }

struct Term {
  std::string name;
  MembershipFunction mf;
  friend bool operator==(const Term&, const Term&) = default;
};

class FuzzyVariable {
 public:
  /// Throws ConfigError on an empty name or lo >= hi.
  FuzzyVariable(std::string name, double lo, double hi);

  /// Throws ConfigError if the term name is already taken.
  FuzzyVariable& add_term(std::string name, MembershipFunction mf);

  const std::string& name() const { return name_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  const std::vector<Term>& terms() const { return terms_; }

  std::optional<std::size_t> find_term(std::string_view term) const;
  /// Throws ConfigError if the term does not exist.
  const MembershipFunction& term(std::string_view term) const;

  double clamp(double x) const;

  friend bool operator==(const FuzzyVariable&, const FuzzyVariable&) = default;

 private:
  std::string name_;
  double lo_;
  double hi_;
  std::vector<Term> terms_;
};

enum class Connective { And, Or };

struct Clause {
  std::string variable;
  std::string term;
  bool negated = false;
  friend bool operator==(const Clause&, const Clause&) = default;
};

struct FuzzyRule {
  std::vector<Clause> antecedent;
  Connective connective = Connective::And;
  std::string consequent;  // term of the output variable
  friend bool operator==(const FuzzyRule&, const FuzzyRule&) = default;
};

struct FisResult {
  double value = 0.0;
  /// No rule fired; value is the output universe midpoint.
  bool indeterminate = false;
};

/// An immutable, validated Mamdani system. Evaluation is read-only and safe
/// for any number of concurrent callers.
class MamdaniFis {
 public:
  /// Validates the whole system and precomputes the sampled consequents.
  /// Throws ConfigError on any unresolved reference or invariant violation.
  MamdaniFis(std::vector<FuzzyVariable> inputs, FuzzyVariable output,
             std::vector<FuzzyRule> rules, int resolution = 1001);

  const std::vector<FuzzyVariable>& inputs() const { return inputs_; }
  const FuzzyVariable& output() const { return output_; }
  const std::vector<FuzzyRule>& rules() const { return rules_; }
  int resolution() const { return resolution_; }

  /// Index of an input variable by name; throws ConfigError if absent.
  std::size_t input_index(std::string_view name) const;

  /// Firing strength of rule `rule` for crisp inputs given in input order.
  double rule_activation(std::size_t rule, std::span<const double> crisp) const;
  std::vector<double> activations(std::span<const double> crisp) const;

  /// Aggregated output curve A(y) on the sample grid for the given rule
  /// activations (one per rule).
  std::vector<double> aggregate(std::span<const double> activations) const;

  /// Min-implication, max-aggregation and centroid for precomputed activations.
  FisResult evaluate_activations(std::span<const double> activations) const;

  /// Crisp inputs in input-variable order; values are clamped to each universe.
  FisResult evaluate(std::span<const double> crisp) const;
  /// Crisp inputs by variable name; throws ConfigError if one is missing.
  FisResult evaluate(const std::map<std::string, double>& crisp) const;

  /// Evenly spaced output universe samples.
  const std::vector<double>& sample_points() const { return grid_; }

  friend bool operator==(const MamdaniFis& a, const MamdaniFis& b) {
    return a.inputs_ == b.inputs_ && a.output_ == b.output_ && a.rules_ == b.rules_ &&
           a.resolution_ == b.resolution_;
  }

 private:
  struct ResolvedClause {
    std::size_t input;
    std::size_t term;
    bool negated;
  };
  struct ResolvedRule {
    std::vector<ResolvedClause> clauses;
    Connective connective;
    std::size_t consequent;
  };

  std::vector<FuzzyVariable> inputs_;
  FuzzyVariable output_;
  std::vector<FuzzyRule> rules_;
  int resolution_;

  std::vector<ResolvedRule> resolved_;
  std::vector<double> grid_;
  // consequent_samples_[rule][i] = consequent membership at grid_[i]
  std::vector<std::vector<double>> consequent_samples_;
};

/// Activation of `rule` with its references resolved against `fis`.
/// Throws ConfigError for unknown variables/terms or missing inputs.
double rule_activation(const MamdaniFis& fis, const FuzzyRule& rule,
                       const std::map<std::string, double>& crisp);

inline FisResult fis_eval(const MamdaniFis& fis, const std::map<std::string, double>& crisp) {
  return fis.evaluate(crisp);
}

/// Weighted mean sum(y*A)/sum(A). Empty optional when the total mass is zero.
std::optional<double> defuzz_centroid(std::span<const double> ys, std::span<const double> mass);

}  // namespace closet::fuzzy
