#include "ldpc/degree.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace ldpc {

namespace {

constexpr double kSumSlack = 1e-9;

}  // namespace

DegreePolynomial::DegreePolynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("degree polynomial: no coefficients");
    double sum = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!(coeffs_[i] >= 0.0))
            throw std::invalid_argument("degree polynomial: negative coefficient at degree " +
                                        std::to_string(i + 1));
        sum += coeffs_[i];
    }
    if (std::abs(sum - 1.0) > kSumSlack)
        throw std::invalid_argument("degree polynomial: coefficients sum to " +
                                    std::to_string(sum) + ", expected 1");
    if (sum != 1.0) {
        for (double& c : coeffs_) c /= sum;
    }
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
}

DegreePolynomial DegreePolynomial::from_degree_map(const std::map<int, double>& fractions) {
    if (fractions.empty()) throw std::invalid_argument("degree polynomial: empty degree map");
    int max_deg = fractions.rbegin()->first;
    if (fractions.begin()->first < 1)
        throw std::invalid_argument("degree polynomial: degrees start at 1");
    std::vector<double> dense(static_cast<std::size_t>(max_deg), 0.0);
    for (const auto& [deg, frac] : fractions) dense[static_cast<std::size_t>(deg - 1)] = frac;
    return DegreePolynomial(std::move(dense));
}

DegreePolynomial DegreePolynomial::monomial(int degree) {
    return from_degree_map({{degree, 1.0}});
}

double DegreePolynomial::eval(double x) const {
    if (!(x >= 0.0 && x <= 1.0))
        throw std::domain_error("degree polynomial eval: x outside [0,1]");
    return eval_unchecked(x);
}

double DegreePolynomial::eval_unchecked(double x) const {
    // Horner on sum_i c_i x^{i-1}.
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

double DegreePolynomial::derivative_at_one() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        acc += static_cast<double>(i) * coeffs_[i];
    return acc;
}

double DegreePolynomial::inverse_degree_mean() const {
    double acc = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        acc += coeffs_[i] / static_cast<double>(i + 1);
    return acc;
}

DegreePolynomial DegreePolynomial::node_perspective() const {
    double z = inverse_degree_mean();
    if (z <= 0.0) throw std::invalid_argument("node_perspective: degenerate distribution");
    std::vector<double> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = coeffs_[i] / static_cast<double>(i + 1) / z;
    return DegreePolynomial(std::move(out));
}

DegreePolynomial DegreePolynomial::edge_perspective() const {
    double z = 0.0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        z += static_cast<double>(i + 1) * coeffs_[i];
    std::vector<double> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[i] = static_cast<double>(i + 1) * coeffs_[i] / z;
    return DegreePolynomial(std::move(out));
}

double DegreePolynomial::coeff(int degree) const {
    if (degree < 1 || degree > max_degree()) return 0.0;
    return coeffs_[static_cast<std::size_t>(degree - 1)];
}

double design_rate(const DegreePolynomial& lambda, const DegreePolynomial& rho) {
    double lam = lambda.inverse_degree_mean();
    if (lam <= 0.0) throw std::invalid_argument("design_rate: sum lambda_i/i is zero");
    return 1.0 - rho.inverse_degree_mean() / lam;
}

Ensemble::Ensemble(DegreePolynomial lambda, DegreePolynomial rho, std::string label)
    : lambda_(std::move(lambda)), rho_(std::move(rho)), label_(std::move(label)) {
    design_rate_ = design_rate(lambda_, rho_);
    if (!(design_rate_ > 0.0 && design_rate_ < 1.0))
        throw std::invalid_argument("ensemble: design rate " + std::to_string(design_rate_) +
                                    " outside (0,1)");
    if (label_.empty()) {
        std::ostringstream os;
        os << "lambda_dmax" << lambda_.max_degree() << "_rho_dmax" << rho_.max_degree();
        label_ = os.str();
    }
}

Ensemble Ensemble::regular(int var_degree, int check_degree) {
    std::ostringstream os;
    os << "(" << var_degree << "," << check_degree << ")-regular";
    return Ensemble(DegreePolynomial::monomial(var_degree),
                    DegreePolynomial::monomial(check_degree), os.str());
}

namespace {

DegreePolynomial poly_from_json(const nlohmann::json& obj, const std::string& which) {
    if (!obj.is_object())
        throw std::invalid_argument("ensemble file: \"" + which + "\" must be an object");
    std::map<int, double> fractions;
    for (const auto& [key, value] : obj.items()) {
        int degree = 0;
        try {
            std::size_t pos = 0;
            degree = std::stoi(key, &pos);
            if (pos != key.size()) throw std::invalid_argument(key);
        } catch (const std::exception&) {
            throw std::invalid_argument("ensemble file: key \"" + key + "\" in \"" + which +
                                        "\" is not a degree");
        }
        if (degree < 1)
            throw std::invalid_argument("ensemble file: degree " + key + " in \"" + which +
                                        "\" must be >= 1");
        if (!value.is_number())
            throw std::invalid_argument("ensemble file: value for degree " + key + " in \"" +
                                        which + "\" is not a number");
        fractions[degree] = value.get<double>();
    }
    try {
        return DegreePolynomial::from_degree_map(fractions);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("ensemble file: \"" + which + "\": " + e.what());
    }
}

}  // namespace

Ensemble Ensemble::parse_json(const std::string& text, const std::string& label) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("ensemble file: ") + e.what());
    }
    if (!doc.contains("lambda"))
        throw std::invalid_argument("ensemble file: missing key \"lambda\"");
    if (!doc.contains("rho")) throw std::invalid_argument("ensemble file: missing key \"rho\"");
    return Ensemble(poly_from_json(doc["lambda"], "lambda"), poly_from_json(doc["rho"], "rho"),
                    label);
}

Ensemble Ensemble::load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("ensemble file: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path);
}

}  // namespace ldpc
