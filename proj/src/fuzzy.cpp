#include "closet/fuzzy.hpp"

#include <algorithm>
#include <cmath>

#include "closet/error.hpp"

namespace closet::fuzzy {

MembershipFunction MembershipFunction::gaussian(double center, double sigma) {
  if (!std::isfinite(center) || !std::isfinite(sigma) || sigma <= 0.0) {
    throw ConfigError("gaussian membership needs finite center and sigma > 0, got sigma=" +
                      std::to_string(sigma));
  }
  return MembershipFunction(Gaussian{center, sigma});
}

MembershipFunction MembershipFunction::triangular(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || a > b || b > c || !(a < c)) {
    throw ConfigError("triangular membership needs a <= b <= c and a < c, got (" +
                      std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) +
                      ")");
  }
  return MembershipFunction(Triangular{a, b, c});
}

namespace {

double eval_shape(const Gaussian& g, double x) {
  const double z = (x - g.center) / g.sigma;
  return std::exp(-0.5 * z * z);
}

double eval_shape(const Triangular& t, double x) {
  if (x < t.a || x > t.c) return 0.0;
  if (x == t.b) return 1.0;
  if (x < t.b) return (x - t.a) / (t.b - t.a);
  return (t.c - x) / (t.c - t.b);
}

}  // namespace

double MembershipFunction::operator()(double x) const {
  return std::visit([x](const auto& s) { return eval_shape(s, x); }, shape_);
}

FuzzyVariable::FuzzyVariable(std::string name, double lo, double hi)
    : name_(std::move(name)), lo_(lo), hi_(hi) {
  if (name_.empty()) throw ConfigError("fuzzy variable needs a name");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    throw ConfigError("variable '" + name_ + "' needs a universe with lo < hi");
  }
}

FuzzyVariable& FuzzyVariable::add_term(std::string name, MembershipFunction mf) {
  if (name.empty()) throw ConfigError("variable '" + name_ + "': empty term name");
  if (find_term(name)) throw ConfigError("variable '" + name_ + "': duplicate term '" + name + "'");
  terms_.push_back(Term{std::move(name), mf});
  return *this;
}

std::optional<std::size_t> FuzzyVariable::find_term(std::string_view term) const {
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].name == term) return i;
  }
  return std::nullopt;
}

const MembershipFunction& FuzzyVariable::term(std::string_view term) const {
  auto idx = find_term(term);
  if (!idx) throw ConfigError("variable '" + name_ + "' has no term '" + std::string(term) + "'");
  return terms_[*idx].mf;
}

double FuzzyVariable::clamp(double x) const {
  if (std::isnan(x)) return x;
  return std::clamp(x, lo_, hi_);
}

MamdaniFis::MamdaniFis(std::vector<FuzzyVariable> inputs, FuzzyVariable output,
                       std::vector<FuzzyRule> rules, int resolution)
    : inputs_(std::move(inputs)),
      output_(std::move(output)),
      rules_(std::move(rules)),
      resolution_(resolution) {
  if (resolution_ < 2) throw ConfigError("FIS resolution must be >= 2");
  if (inputs_.empty()) throw ConfigError("FIS needs at least one input variable");
  if (rules_.empty()) throw ConfigError("FIS needs at least one rule");
  if (output_.terms().empty()) throw ConfigError("output variable has no terms");
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    for (std::size_t j = i + 1; j < inputs_.size(); ++j) {
      if (inputs_[i].name() == inputs_[j].name()) {
        throw ConfigError("duplicate input variable '" + inputs_[i].name() + "'");
      }
    }
  }

  for (const auto& rule : rules_) {
    if (rule.antecedent.empty()) throw ConfigError("rule with empty antecedent");
    ResolvedRule rr{{}, rule.connective, 0};
    for (const auto& clause : rule.antecedent) {
      const std::size_t in = input_index(clause.variable);
      auto term = inputs_[in].find_term(clause.term);
      if (!term) {
        throw ConfigError("rule references unknown term '" + clause.term + "' of variable '" +
                          clause.variable + "'");
      }
      rr.clauses.push_back({in, *term, clause.negated});
    }
    auto out_term = output_.find_term(rule.consequent);
    if (!out_term) {
      throw ConfigError("rule consequent '" + rule.consequent + "' is not a term of '" +
                        output_.name() + "'");
    }
    rr.consequent = *out_term;
    resolved_.push_back(std::move(rr));
  }

  grid_.resize(static_cast<std::size_t>(resolution_));
  const double step = (output_.hi() - output_.lo()) / (resolution_ - 1);
  for (int i = 0; i < resolution_; ++i) grid_[i] = output_.lo() + step * i;
  grid_.back() = output_.hi();

  for (const auto& rr : resolved_) {
    const auto& mf = output_.terms()[rr.consequent].mf;
    std::vector<double> samples(grid_.size());
    std::transform(grid_.begin(), grid_.end(), samples.begin(), [&](double y) { return mf(y); });
    consequent_samples_.push_back(std::move(samples));
  }
}

std::size_t MamdaniFis::input_index(std::string_view name) const {
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    if (inputs_[i].name() == name) return i;
  }
  throw ConfigError("unknown input variable '" + std::string(name) + "'");
}

double MamdaniFis::rule_activation(std::size_t rule, std::span<const double> crisp) const {
  const auto& rr = resolved_.at(rule);
  double degree = rr.connective == Connective::And ? 1.0 : 0.0;
  for (const auto& clause : rr.clauses) {
    const auto& var = inputs_[clause.input];
    double mu = var.terms()[clause.term].mf(var.clamp(crisp[clause.input]));
    if (clause.negated) mu = 1.0 - mu;
    degree = rr.connective == Connective::And ? std::min(degree, mu) : std::max(degree, mu);
  }
  return degree;
}

std::vector<double> MamdaniFis::activations(std::span<const double> crisp) const {
  if (crisp.size() != inputs_.size()) {
    throw ConfigError("expected " + std::to_string(inputs_.size()) + " crisp inputs, got " +
                      std::to_string(crisp.size()));
  }
  std::vector<double> act(resolved_.size());
  for (std::size_t r = 0; r < resolved_.size(); ++r) act[r] = rule_activation(r, crisp);
  return act;
}

std::vector<double> MamdaniFis::aggregate(std::span<const double> activations) const {
  std::vector<double> agg(grid_.size(), 0.0);
  for (std::size_t r = 0; r < consequent_samples_.size(); ++r) {
    const double w = activations[r];
    if (w <= 0.0) continue;
    const auto& cs = consequent_samples_[r];
    for (std::size_t i = 0; i < agg.size(); ++i) agg[i] = std::max(agg[i], std::min(w, cs[i]));
  }
  return agg;
}

FisResult MamdaniFis::evaluate_activations(std::span<const double> activations) const {
  if (activations.size() != resolved_.size()) {
    throw ConfigError("expected one activation per rule");
  }
  const auto agg = aggregate(activations);
  if (auto c = defuzz_centroid(grid_, agg)) return {*c, false};
  return {0.5 * (output_.lo() + output_.hi()), true};
}

FisResult MamdaniFis::evaluate(std::span<const double> crisp) const {
  const auto act = activations(crisp);
  return evaluate_activations(act);
}

FisResult MamdaniFis::evaluate(const std::map<std::string, double>& crisp) const {
  std::vector<double> ordered(inputs_.size());
  for (std::size_t i = 0; i < inputs_.size(); ++i) {
    auto it = crisp.find(inputs_[i].name());
    if (it == crisp.end()) throw ConfigError("missing crisp input '" + inputs_[i].name() + "'");
    ordered[i] = it->second;
  }
  return evaluate(ordered);
}

double rule_activation(const MamdaniFis& fis, const FuzzyRule& rule,
                       const std::map<std::string, double>& crisp) {
  if (rule.antecedent.empty()) throw ConfigError("rule with empty antecedent");
  double degree = rule.connective == Connective::And ? 1.0 : 0.0;
  for (const auto& clause : rule.antecedent) {
    const auto& var = fis.inputs()[fis.input_index(clause.variable)];
    const auto& mf = var.term(clause.term);
    auto it = crisp.find(clause.variable);
    if (it == crisp.end()) throw ConfigError("missing crisp input '" + clause.variable + "'");
    double mu = mf(var.clamp(it->second));
    if (clause.negated) mu = 1.0 - mu;
    degree = rule.connective == Connective::And ? std::min(degree, mu) : std::max(degree, mu);
  }
  return degree;
}

std::optional<double> defuzz_centroid(std::span<const double> ys, std::span<const double> mass) {
  double num = 0.0;
  double den = 0.0;
  const std::size_t n = std::min(ys.size(), mass.size());
  for (std::size_t i = 0; i < n; ++i) {
    num += ys[i] * mass[i];
    den += mass[i];
  }
  if (den <= 0.0) return std::nullopt;
  return num / den;
}

}  // namespace closet::fuzzy
