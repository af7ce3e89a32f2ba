#include "affine_basis/report.hpp"

#include <sstream>
#include <stdexcept>

namespace affine_basis {

nlohmann::json StepReport::to_json() const {
  nlohmann::json j;
  j["step"] = step;
  j["spec"] = spec;
  if (partition) j["partition"] = partition->to_json();
  if (degree) j["degree"] = *degree;
  if (weight) j["weight"] = {weight->e1, weight->e2};
  if (count) j["count"] = *count;
  if (rank) j["rank"] = *rank;
  if (scalar) j["scalar"] = to_string(*scalar);
  j["pass"] = pass;
  if (!witness.is_null()) j["witness"] = witness;
  return j;
}

bool SweepReport::pass() const { return failures() == 0; }

std::size_t SweepReport::failures() const {
  std::size_t n = 0;
  for (const auto& r : reports) n += r.pass ? 0 : 1;
  return n;
}

const StepReport* SweepReport::first_failure() const {
  for (const auto& r : reports)
    if (!r.pass) return &r;
  return nullptr;
}

nlohmann::json SweepReport::to_json() const {
  nlohmann::json j;
  j["step"] = step;
  j["spec"] = spec;
  j["pass"] = pass();
  j["checks"] = reports.size();
  j["failures"] = failures();
  nlohmann::json items = nlohmann::json::array();
  for (const auto& r : reports) items.push_back(r.to_json());
  j["reports"] = std::move(items);
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_rows(const SweepReport& sweep, std::ostringstream& os) {
  for (const auto& r : sweep.reports) {
    os << csv_field(r.step) << ',' << csv_field(r.spec) << ',';
    if (r.degree) os << *r.degree;
    os << ',';
    if (r.weight) os << csv_field(to_string(*r.weight));
    os << ',';
    if (r.count) os << *r.count;
    os << ',';
    if (r.rank) os << *r.rank;
    os << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

void text_rows(const SweepReport& sweep, std::ostringstream& os) {
  os << sweep.step << " " << sweep.spec << ": " << (sweep.pass() ? "PASS" : "FAIL") << " (" << sweep.reports.size()
     << " checks, " << sweep.failures() << " failures)\n";
  for (const auto& r : sweep.reports) {
    os << "  " << (r.pass ? "ok  " : "FAIL") << " " << r.step;
    if (r.partition) os << " pi=" << r.partition->to_string();
    if (r.degree) os << " degree=" << *r.degree;
    if (r.weight) os << " weight=" << to_string(*r.weight);
    if (r.count) os << " count=" << *r.count;
    if (r.rank) os << " rank=" << *r.rank;
    if (r.scalar) os << " scalar=" << to_string(*r.scalar);
    if (!r.pass && !r.witness.is_null()) os << " witness=" << r.witness.dump();
    os << '\n';
  }
}

constexpr const char* kCsvHeader = "step,spec,degree,weight,count,rank,pass\n";

}  // namespace

std::string SweepReport::to_csv() const {
  std::ostringstream os;
  os << kCsvHeader;
  csv_rows(*this, os);
  return os.str();
}

std::string SweepReport::to_text() const {
  std::ostringstream os;
  text_rows(*this, os);
  return os.str();
}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "text") return OutputFormat::text;
  throw std::invalid_argument("unknown output format '" + name + "'");
}

std::string render(const SweepReport& sweep, OutputFormat format) {
  return render(std::vector<SweepReport>{sweep}, format);
}

std::string render(const std::vector<SweepReport>& sweeps, OutputFormat format) {
  std::ostringstream os;
  switch (format) {
    case OutputFormat::json: {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& s : sweeps) j.push_back(s.to_json());
      os << (sweeps.size() == 1 ? j[0] : j).dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      os << kCsvHeader;
      for (const auto& s : sweeps) csv_rows(s, os);
      break;
    case OutputFormat::text:
      for (const auto& s : sweeps) text_rows(s, os);
      break;
  }
  return os.str();
}

std::string partitions_jsonl(const std::vector<ColoredPartition>& partitions) {
  std::string out;
  for (const auto& p : partitions) out += p.to_json().dump() + "\n";
  return out;
}

}  // namespace affine_basis
