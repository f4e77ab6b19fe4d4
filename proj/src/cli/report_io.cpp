#include "superpair/cli/report_io.hpp"

namespace superpair::cli {

const char* status_name(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::input_error:
      return "input-error";
  }
  return "input-error";
}

Json properties_to_json(const Report& report) {
  Json out = Json::array();
  for (const auto& p : report.properties) {
    Json prop = Json::object();
    prop["name"] = p.name;
    prop["status"] = p.passed ? "pass" : "fail";
    prop["checked"] = p.checked;
    Json ws = Json::array();
    for (const auto& w : p.witnesses) {
      Json wj = Json::object();
      wj["index"] = w.index;
      wj["lhs"] = vector_to_json(w.lhs);
      wj["rhs"] = vector_to_json(w.rhs);
      ws.push_back(std::move(wj));
    }
    prop["witnesses"] = std::move(ws);
    if (!p.note.empty()) prop["note"] = p.note;
    out.push_back(std::move(prop));
  }
  return out;
}

Report report_from_json(const Json& properties, const Field& field) {
  Report r;
  for (const auto& p : properties) {
    PropertyResult pr;
    pr.name = p.at("name").get<std::string>();
    pr.passed = p.at("status") == "pass";
    pr.checked = p.at("checked").get<std::size_t>();
    if (p.contains("note")) pr.note = p.at("note").get<std::string>();
    for (const auto& w : p.at("witnesses")) {
      Witness wi;
      wi.index = w.at("index").get<std::vector<std::size_t>>();
      for (const auto& s : w.at("lhs")) wi.lhs.push_back(field.parse_scalar(s.get<std::string>()));
      for (const auto& s : w.at("rhs")) wi.rhs.push_back(field.parse_scalar(s.get<std::string>()));
      pr.witnesses.push_back(std::move(wi));
    }
    r.add(std::move(pr));
  }
  return r;
}

Json report_document(const std::string& command, Status status, const Report& report, const Json& data) {
  Json doc = Json::object();
  doc["command"] = command;
  doc["status"] = status_name(status);
  doc["properties"] = properties_to_json(report);
  for (const auto& [key, value] : data.items()) doc[key] = value;
  return doc;
}

namespace {

std::string join(const Vector& v) {
  std::string out = "[";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + v[k].to_string();
  return out + "]";
}

}  // namespace

std::string report_text(const std::string& command, Status status, const Report& report, const Json& data) {
  std::string out = command + ": " + status_name(status) + "\n";
  for (const auto& p : report.properties) {
    out += std::string(p.passed ? "  pass  " : "  FAIL  ") + p.name;
    if (p.checked > 0) out += " (" + std::to_string(p.checked) + " checked)";
    if (!p.note.empty()) out += ": " + p.note;
    out += "\n";
    for (const auto& w : p.witnesses) {
      out += "        at (";
      for (std::size_t k = 0; k < w.index.size(); ++k) out += (k ? ", " : "") + std::to_string(w.index[k]);
      out += "): lhs " + join(w.lhs) + " rhs " + join(w.rhs) + "\n";
    }
  }
  if (!data.empty()) out += dump_canonical(data);
  return out;
}

}  // namespace superpair::cli
