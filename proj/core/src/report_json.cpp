// Copyright 2026 The Conesmooth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "conesmooth/report_json.h"

#include <json.hpp>

namespace conesmooth {

namespace {

using Json = nlohmann::ordered_json;

Json VertexJson(const VertexVerdict& v) {
  Json j;
  j["vertex"] = v.vertex.value;
  j["pass"] = v.pass;
  j["boundary"] = v.boundary;
  j["face_count"] = v.face_count;
  j["simplex_count"] = v.simplex_count;
  if (v.scale_interval) {
    j["scale_interval"] = {v.scale_interval->lower, v.scale_interval->upper};
  }
  if (v.cone_angle) j["cone_angle"] = *v.cone_angle;
  if (!v.witness.empty()) j["witness"] = v.witness;
  return j;
}

Json FaceJson(const FaceVerdict& f) {
  Json j;
  j["face"] = f.face;
  j["pass"] = f.pass;
  j["scale"] = f.scale;
  j["bilip_constant"] = f.bilip_constant;
  if (!f.witness.empty()) j["witness"] = f.witness;
  return j;
}

}  // namespace

std::string ToJson(const CertificationReport& report) {
  Json j;
  j["mode"] = ModeName(report.mode);
  const bool angle_mode = report.mode == CertificationMode::kAngleHypothesis ||
                          report.mode == CertificationMode::kAngleObstruction;
  if (angle_mode) {
    j["K"] = report.parameter;
  } else {
    j["M"] = static_cast<long>(report.parameter);
  }
  j["pass"] = report.pass;
  if (report.window) j["window"] = {(*report.window)[0], (*report.window)[1]};
  if (report.minimal_m) j["minimal_M"] = *report.minimal_m;
  j["vertices"] = Json::array();
  for (const auto& v : report.vertices) j["vertices"].push_back(VertexJson(v));
  if (!angle_mode) {
    j["faces"] = Json::array();
    for (const auto& f : report.faces) j["faces"].push_back(FaceJson(f));
  }
  return j.dump(2) + "\n";
}

std::string ToJson(const VerificationReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["K_hyp"] = r.k_hyp;
  j["l_bound"] = r.l_bound;
  j["curvature"] = {{"bound", r.curvature_bound}, {"sup", r.curvature_sup}, {"pass", r.curvature_pass}};
  j["distortion"] = {{"max", r.distortion_max}, {"bound", r.k_hyp}, {"pass", r.distortion_pass}};
  j["gauss_bonnet"] = {{"max_residual", r.gauss_bonnet_max_residual}, {"pass", r.gauss_bonnet_pass}};
  j["discrete_gauss_bonnet"] = {{"euler_characteristic", r.euler_characteristic},
                                {"total_defect", r.total_defect},
                                {"target", r.defect_target},
                                {"residual", r.defect_residual},
                                {"pass", r.defect_pass}};
  j["cones"] = Json::array();
  for (const auto& c : r.cones) {
    j["cones"].push_back({{"vertex", c.vertex.value},
                          {"alpha", c.alpha},
                          {"rho", c.rho},
                          {"curvature_sup", c.curvature_sup},
                          {"curvature_sup_radius", c.curvature_sup_radius},
                          {"distortion", c.distortion},
                          {"total_curvature", c.total_curvature},
                          {"gauss_bonnet_residual", c.gauss_bonnet_residual}});
  }
  return j.dump(2) + "\n";
}

std::string ToJson(const KernelCertificate& c) {
  Json j;
  j["kernel"] = c.kernel_name;
  j["grid_step"] = c.grid_step;
  j["grid_points"] = c.grid_points;
  j["max_f"] = {{"value", c.max_value}, {"at", c.argmax_value}, {"padding", c.padding_value}};
  j["max_abs_d1"] = {{"value", c.max_abs_d1}, {"at", c.argmax_d1}, {"padding", c.padding_d1}};
  j["max_abs_d2"] = {{"value", c.max_abs_d2}, {"at", c.argmax_d2}, {"padding", c.padding_d2}};
  j["max_abs_d3"] = c.max_abs_d3;
  j["d3_lipschitz_bound"] = c.d3_bound;
  j["certified_bound"] = c.certified_bound;
  j["limit"] = kKernelBoundLimit;
  return j.dump(2) + "\n";
}

}  // namespace conesmooth
