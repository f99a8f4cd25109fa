#include "sarp/common/error.hpp"
#include "sarp/diffcore/mlp.hpp"
#include "sarp/eval/metrics.hpp"
#include "sarp/pipeline/pipeline.hpp"
#include "sarp/repair/repair.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using json = nlohmann::json;
using namespace sarp;

namespace {

// JSON crosses the boundary as text; the python side wraps json.dumps/loads.
json parse(const std::string& text) { return json::parse(text); }

ConstraintSet constraints_for(const std::string& constraints_json, const MlpModel& policy,
                              const MlpModel& predictor) {
  return parse_constraint_set(parse(constraints_json), predictor.output_width(), policy.output_width());
}

RepairData make_data(const Matrix& inputs, const Matrix& context) { return {inputs, context}; }

py::dict safety_dict(const SafetyReport& r) {
  py::dict d;
  d["safe"] = r.safe;
  d["violating_samples"] = r.violating_samples;
  d["max_residual"] = r.max_residual;
  d["mean_residual"] = r.mean_residual;
  return d;
}

py::dict summary_dict(const pipeline::RepairSummary& s) {
  py::dict d;
  d["label"] = s.label;
  d["mode"] = std::string(to_string(s.mode));
  d["converged"] = s.converged;
  d["outer_iterations"] = s.outer_iterations;
  d["returned_iteration"] = s.returned_iteration;
  d["samples"] = s.samples;
  d["initial_violating"] = s.initial_violating;
  d["final_violating"] = s.final_violating;
  return d;
}

py::list reports_list(const std::vector<MetricsReport>& reports) {
  py::list out;
  for (const auto& r : reports) {
    py::dict metrics;
    for (const auto& e : r.entries) {
      if (e.value) {
        metrics[py::str(e.name)] = *e.value;
      } else {
        metrics[py::str(e.name)] = py::none();
      }
    }
    py::dict d;
    d["scenario"] = r.scenario;
    d["policy"] = r.policy;
    d["metrics"] = metrics;
    out.append(d);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Safety-aware policy repair: C++ core";

  // translators are tried newest first, so the base class goes in first
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<MlpModel>(m, "Model")
      .def_static(
          "create",
          [](std::vector<int> sizes, const std::string& activation, const std::string& output, std::uint64_t seed) {
            return MlpModel::create(std::move(sizes), parse_activation(activation), parse_output_activation(output),
                                    seed);
          },
          py::arg("layer_sizes"), py::arg("activation") = "relu", py::arg("output") = "identity", py::arg("seed") = 1)
      .def_static("load", [](const std::filesystem::path& p) { return load_model(p); })
      .def("save", [](const MlpModel& self, const std::filesystem::path& p) { save_model(p, self); })
      .def("forward", [](const MlpModel& self, const Matrix& x) { return forward(self, x); })
      .def_property_readonly("layer_sizes", [](const MlpModel& self) { return self.layer_sizes; })
      .def_property_readonly("param_count", &MlpModel::param_count)
      .def_property(
          "weights", [](const MlpModel& self) { return self.weights; },
          [](MlpModel& self, std::vector<Matrix> w) {
            self.weights = std::move(w);
            self.validate();
          },
          "Per-layer weights, shape (out, in).")
      .def_property(
          "biases", [](const MlpModel& self) { return self.biases; },
          [](MlpModel& self, std::vector<Matrix> b) {
            self.biases = std::move(b);
            self.validate();
          },
          "Per-layer biases, shape (1, out).")
      .def("__eq__", [](const MlpModel& a, const MlpModel& b) { return a == b; });

  m.def(
      "constraint_residuals",
      [](const std::string& constraints, int feature_width, int action_width, const Matrix& z, const Matrix& a) {
        return parse_constraint_set(parse(constraints), feature_width, action_width).residuals(z, a);
      },
      py::arg("constraints"), py::arg("feature_width"), py::arg("action_width"), py::arg("z"), py::arg("a"),
      "Rectified residuals max(0, g) of a JSON constraint list, one column per constraint.");

  m.def(
      "safety_check",
      [](const MlpModel& policy, const MlpModel& predictor, const std::string& constraints, const Matrix& inputs,
         const Matrix& context, double epsilon) {
        return safety_dict(safety_check(policy, predictor, constraints_for(constraints, policy, predictor),
                                        make_data(inputs, context), epsilon));
      },
      py::arg("policy"), py::arg("predictor"), py::arg("constraints"), py::arg("inputs"), py::arg("context"),
      py::arg("epsilon") = 0.0);

  m.def(
      "repair",
      [](const MlpModel& policy, const MlpModel& predictor, const std::string& constraints, const Matrix& inputs,
         const Matrix& context, const std::string& config) {
        RepairConfig cfg = parse(config).get<RepairConfig>();
        cfg.validate();
        RepairResult r;
        {
          py::gil_scoped_release release;
          r = repair(policy, predictor, constraints_for(constraints, policy, predictor), make_data(inputs, context),
                     cfg);
        }
        py::list trace;
        for (const auto& t : r.trace) {
          py::dict row;
          row["k"] = t.k;
          row["mu"] = t.mu;
          row["lambda"] = std::vector<double>(t.lambda.data(), t.lambda.data() + t.lambda.size());
          row["violating_samples"] = t.violating_samples;
          row["max_residual"] = t.max_residual;
          row["loss"] = t.loss;
          trace.append(row);
        }
        py::dict d = safety_dict(r.report);
        d["policy"] = r.policy;
        d["converged"] = r.converged;
        d["outer_iterations"] = r.outer_iterations;
        d["returned_iteration"] = r.returned_iteration;
        d["trace"] = trace;
        return d;
      },
      py::arg("policy"), py::arg("predictor"), py::arg("constraints"), py::arg("inputs"), py::arg("context"),
      py::arg("config") = "{}");

  m.def("goal_reach_rate", &goal_reach_rate);
  m.def("efficacy", &efficacy);

  m.def(
      "default_config",
      [](const std::string& scenario) { return pipeline::to_json(pipeline::default_config(pipeline::parse_scenario(scenario))).dump(); },
      "Resolved default configuration of a scenario as JSON text.");
  m.def(
      "resolve_config",
      [](const std::string& text) { return pipeline::to_json(pipeline::parse_config(parse(text))).dump(); },
      "Strict parse and validation; returns the resolved JSON text.");

  py::class_<pipeline::Runner>(m, "Runner")
      .def(py::init([](const std::string& config, const std::filesystem::path& dir) {
             pipeline::RunConfig c = pipeline::parse_config(parse(config));
             c.output_dir = dir.string();
             return std::make_unique<pipeline::Runner>(std::move(c), dir);
           }),
           py::arg("config"), py::arg("out_dir"))
      .def_property_readonly("dir", &pipeline::Runner::dir)
      .def("write_resolved_config", &pipeline::Runner::write_resolved_config)
      .def("gen_demos", &pipeline::Runner::gen_demos, py::call_guard<py::gil_scoped_release>())
      .def("gen_explore", &pipeline::Runner::gen_explore, py::call_guard<py::gil_scoped_release>())
      .def("gen_gait", &pipeline::Runner::gen_gait, py::call_guard<py::gil_scoped_release>())
      .def("train_policy", &pipeline::Runner::train_policy, py::call_guard<py::gil_scoped_release>())
      .def("train_predictor", &pipeline::Runner::train_predictor, py::call_guard<py::gil_scoped_release>())
      .def(
          "repair",
          [](pipeline::Runner& r, const std::string& mode) {
            pipeline::RepairSummary s;
            {
              py::gil_scoped_release release;
              s = r.repair(parse_repair_mode(mode));
            }
            return summary_dict(s);
          },
          py::arg("mode") = "lagrangian")
      .def("evaluate", [](pipeline::Runner& r) {
        std::vector<MetricsReport> out;
        {
          py::gil_scoped_release release;
          out = r.evaluate();
        }
        return reports_list(out);
      })
      .def("report", [](pipeline::Runner& r) { return reports_list(r.report()); })
      .def("run_all", [](pipeline::Runner& r) {
        std::vector<pipeline::RepairSummary> out;
        {
          py::gil_scoped_release release;
          out = r.run_all();
        }
        py::list l;
        for (const auto& s : out) l.append(summary_dict(s));
        return l;
      });
}
