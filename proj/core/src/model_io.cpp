#include "levyscale/model_io.hpp"

#include <fstream>

namespace levyscale {

using nlohmann::json;

namespace {

json cpx_to_json(std::complex<double> z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

std::complex<double> cpx_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    return {j.at("re").get<double>(), j.value("im", 0.0)};
}

} // namespace

json model_to_json(const Model& m) {
    json comps = json::array();
    for (const auto& comp : m.components) {
        std::visit(
            [&](const auto& c) {
                using T = std::decay_t<decltype(c)>;
                if constexpr (std::is_same_v<T, GaussianPart>) {
                    comps.push_back({{"type", "gaussian"}, {"sigma", c.sigma}});
                } else if constexpr (std::is_same_v<T, DriftPart>) {
                    comps.push_back({{"type", "drift"}, {"mu", c.mu}});
                } else if constexpr (std::is_same_v<T, TemperedStablePart>) {
                    comps.push_back({{"type", "tempered_stable"},
                                     {"c", c.c},
                                     {"lambda", c.lambda},
                                     {"alpha", c.alpha}});
                } else if constexpr (std::is_same_v<T, StablePart>) {
                    comps.push_back({{"type", "stable"}, {"c", c.c}, {"alpha", c.alpha}});
                } else if constexpr (std::is_same_v<T, AtomPart>) {
                    comps.push_back({{"type", "atom"}, {"c", c.c}, {"a", c.a}});
                } else if constexpr (std::is_same_v<T, ShiftedExpPart>) {
                    comps.push_back({{"type", "shifted_exponential"},
                                     {"c", c.c},
                                     {"a", c.a},
                                     {"rate", c.rate}});
                } else if constexpr (std::is_same_v<T, RationalPart>) {
                    json terms = json::array();
                    for (const auto& t : c.terms)
                        terms.push_back(
                            {{"a", cpx_to_json(t.a)}, {"rho", cpx_to_json(t.rho)}, {"m", t.m}});
                    comps.push_back({{"type", "rational"}, {"terms", terms}});
                } else if constexpr (std::is_same_v<T, ThetaPart>) {
                    comps.push_back({{"type", "theta"},
                                     {"c", c.c},
                                     {"alpha", c.alpha},
                                     {"beta", c.beta},
                                     {"lambda", c.lambda}});
                } else {
                    comps.push_back({{"type", "beta"},
                                     {"c", c.c},
                                     {"alpha", c.alpha},
                                     {"beta", c.beta},
                                     {"lambda", c.lambda}});
                }
            },
            comp);
    }
    return json{{"label", m.label}, {"components", comps}};
}

Model model_from_json(const json& j) {
    Model m;
    m.label = j.value("label", "");
    if (!j.contains("components") || !j["components"].is_array() || j["components"].empty())
        throw ConfigError("model JSON: 'components' must be a non-empty array");
    for (const auto& cj : j["components"]) {
        std::string type = cj.at("type").get<std::string>();
        if (type == "gaussian") {
            GaussianPart p{cj.at("sigma").get<double>()};
            if (p.sigma < 0) throw ConfigError("gaussian: sigma must be >= 0");
            m.components.emplace_back(p);
        } else if (type == "drift") {
            m.components.emplace_back(DriftPart{cj.at("mu").get<double>()});
        } else if (type == "tempered_stable") {
            TemperedStablePart p{cj.at("c").get<double>(), cj.at("lambda").get<double>(),
                                 cj.at("alpha").get<double>()};
            if (!(p.c > 0) || !(p.lambda > 0) || p.alpha >= 2.0 || p.alpha == 0.0 ||
                p.alpha == 1.0)
                throw ConfigError("tempered_stable: need c > 0, lambda > 0, "
                                  "alpha in (-inf,2) \\ {0,1}");
            m.components.emplace_back(p);
        } else if (type == "stable") {
            StablePart p{cj.at("c").get<double>(), cj.at("alpha").get<double>()};
            if (!(p.c > 0) || !(p.alpha > 0) || p.alpha >= 2.0 || p.alpha == 1.0)
                throw ConfigError("stable: need c > 0, alpha in (0,2) \\ {1}");
            m.components.emplace_back(p);
        } else if (type == "atom") {
            AtomPart p{cj.at("c").get<double>(), cj.at("a").get<double>()};
            if (p.c < 0 || !(p.a > 0)) throw ConfigError("atom: need c >= 0, a > 0");
            m.components.emplace_back(p);
        } else if (type == "shifted_exponential") {
            ShiftedExpPart p{cj.at("c").get<double>(), cj.at("a").get<double>(),
                             cj.value("rate", 1.0)};
            if (p.c < 0 || !(p.a > 0) || !(p.rate > 0))
                throw ConfigError("shifted_exponential: need c >= 0, a > 0, rate > 0");
            m.components.emplace_back(p);
        } else if (type == "rational") {
            RationalPart p;
            for (const auto& tj : cj.at("terms")) {
                RationalTerm t;
                t.a = cpx_from_json(tj.at("a"));
                t.rho = cpx_from_json(tj.at("rho"));
                t.m = tj.value("m", 1);
                if (t.rho.real() <= 0) throw ConfigError("rational: need Re(rho) > 0");
                if (t.m < 1) throw ConfigError("rational: need m >= 1");
                p.terms.push_back(t);
            }
            m.components.emplace_back(std::move(p));
        } else if (type == "theta") {
            ThetaPart p{cj.at("c").get<double>(), cj.at("alpha").get<double>(),
                        cj.at("beta").get<double>(), cj.at("lambda").get<double>()};
            if (!(p.c > 0) || !(p.alpha > 0) || !(p.beta > 0) ||
                (p.lambda != 1.5 && p.lambda != 2.5))
                throw ConfigError("theta: need c, alpha, beta > 0 and lambda in {1.5, 2.5}");
            m.components.emplace_back(p);
        } else if (type == "beta") {
            BetaPart p{cj.at("c").get<double>(), cj.at("alpha").get<double>(),
                       cj.at("beta").get<double>(), cj.at("lambda").get<double>()};
            if (!(p.c > 0) || !(p.alpha > 0) || !(p.beta > 0) || p.lambda <= 1.0 ||
                p.lambda >= 3.0 || p.lambda == 2.0)
                throw ConfigError("beta: need c, alpha, beta > 0 and lambda in (1,2) u (2,3)");
            m.components.emplace_back(p);
        } else {
            throw ConfigError("model JSON: unknown component type '" + type + "'");
        }
    }
    return m;
}

Model load_model_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open model file: " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ConfigError(std::string("model JSON parse error: ") + e.what());
    }
    return model_from_json(j);
}

void save_model_file(const Model& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write model file: " + path);
    out << model_to_json(m).dump(2) << "\n";
}

} // namespace levyscale
