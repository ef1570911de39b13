#ifndef LDPC_DEGREE_HPP
#define LDPC_DEGREE_HPP

#include <map>
#include <string>
#include <vector>

namespace ldpc {

// Edge-perspective degree distribution lambda(x) = sum_i c_i x^{i-1}.
// coeffs[i-1] is the fraction of edges attached to degree-i nodes, so the
// vector starts at degree 1 and there is no degree-0 slot.
class DegreePolynomial {
  public:
    // Dense coefficients, index 0 <-> degree 1. Coefficients must be
    // nonnegative and sum to 1; sums within 1e-9 of 1 are renormalized,
    // anything further off is rejected.
    explicit DegreePolynomial(std::vector<double> coeffs);

    static DegreePolynomial from_degree_map(const std::map<int, double>& fractions);
    static DegreePolynomial monomial(int degree);  // single degree, fraction 1

    // sum_i c_i x^{i-1} for x in [0,1]; throws std::domain_error outside.
    double eval(double x) const;
    // Same polynomial without the domain guard (union-bound recursions feed
    // arguments > 1 and the value is used as-is).
    double eval_unchecked(double x) const;

    // sum_i (i-1) c_i, i.e. the derivative at x = 1.
    double derivative_at_one() const;

    // Fraction of nodes (rather than edges) of each degree:
    // out_i = (c_i / i) / sum_j (c_j / j).
    DegreePolynomial node_perspective() const;
    // Inverse of node_perspective: out_i = i c_i / sum_j j c_j.
    DegreePolynomial edge_perspective() const;

    int max_degree() const { return static_cast<int>(coeffs_.size()); }
    double coeff(int degree) const;
    const std::vector<double>& coeffs() const { return coeffs_; }
    // Mean of 1/degree under the edge weights: sum_i c_i / i.
    double inverse_degree_mean() const;

    bool operator==(const DegreePolynomial& other) const = default;

  private:
    std::vector<double> coeffs_;
};

// 1 - (sum_i rho_i/i) / (sum_i lambda_i/i). Throws if the denominator is 0.
double design_rate(const DegreePolynomial& lambda, const DegreePolynomial& rho);

// A (lambda, rho) irregular LDPC ensemble. Construction requires a design
// rate strictly inside (0, 1).
class Ensemble {
  public:
    Ensemble(DegreePolynomial lambda, DegreePolynomial rho, std::string label = "");

    static Ensemble regular(int var_degree, int check_degree);
    // JSON file of the form {"lambda": {"3": 1.0}, "rho": {"6": 1.0}} with
    // degrees as decimal-string keys and edge fractions as values.
    static Ensemble load_json(const std::string& path);
    static Ensemble parse_json(const std::string& text, const std::string& label);

    const DegreePolynomial& lambda() const { return lambda_; }
    const DegreePolynomial& rho() const { return rho_; }
    double rate() const { return design_rate_; }
    const std::string& label() const { return label_; }
    // Degree-1 variable nodes keep every recursion bounded away from zero;
    // callers surface this as a warning rather than an error.
    bool has_degree_one_variables() const { return lambda_.coeff(1) > 0.0; }

  private:
    DegreePolynomial lambda_;
    DegreePolynomial rho_;
    double design_rate_;
    std::string label_;
};

}  // namespace ldpc

#endif
