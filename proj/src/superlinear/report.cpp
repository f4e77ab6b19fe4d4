#include "superpair/superlinear/report.hpp"

#include <algorithm>
#include <thread>

namespace superpair {

bool Report::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyResult& p) { return p.passed; });
}

const PropertyResult* Report::find(const std::string& name) const {
  for (const auto& p : properties) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

bool Report::passed(const std::string& name) const {
  const auto* p = find(name);
  return p != nullptr && p->passed;
}

std::vector<std::string> Report::failures() const {
  std::vector<std::string> out;
  for (const auto& p : properties) {
    if (!p.passed) out.push_back(p.name);
  }
  return out;
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto p : other.properties) {
    if (!prefix.empty()) p.name = prefix + "." + p.name;
    properties.push_back(std::move(p));
  }
}

namespace {

std::size_t box_size(const std::vector<std::size_t>& extents) {
  std::size_t total = 1;
  for (auto e : extents) total *= e;
  return total;
}

void unflatten(std::size_t flat, const std::vector<std::size_t>& extents, std::vector<std::size_t>& out) {
  for (std::size_t k = extents.size(); k-- > 0;) {
    out[k] = flat % extents[k];
    flat /= extents[k];
  }
}

struct ChunkResult {
  std::vector<Witness> witnesses;
};

ChunkResult run_chunk(const Identity& identity, std::size_t begin, std::size_t end, bool all) {
  ChunkResult r;
  std::vector<std::size_t> idx(identity.extents.size());
  for (std::size_t flat = begin; flat < end; ++flat) {
    unflatten(flat, identity.extents, idx);
    auto [lhs, rhs] = identity.sides(idx);
    if (lhs != rhs) {
      r.witnesses.push_back(Witness{idx, std::move(lhs), std::move(rhs)});
      if (!all) break;
    }
  }
  return r;
}

}  // namespace

PropertyResult sweep(const Identity& identity, const CheckOptions& options) {
  PropertyResult result;
  result.name = identity.name;
  const std::size_t total = box_size(identity.extents);
  result.checked = total;
  const std::size_t jobs = std::max<std::size_t>(1, std::min<std::size_t>(options.jobs, total));
  std::vector<ChunkResult> chunks(jobs);
  if (jobs == 1) {
    chunks[0] = run_chunk(identity, 0, total, options.all_witnesses);
  } else {
    std::vector<std::jthread> workers;
    const std::size_t step = (total + jobs - 1) / jobs;
    for (std::size_t j = 0; j < jobs; ++j) {
      const std::size_t b = std::min(total, j * step);
      const std::size_t e = std::min(total, b + step);
      workers.emplace_back([&, j, b, e] { chunks[j] = run_chunk(identity, b, e, options.all_witnesses); });
    }
  }
  for (auto& c : chunks) {
    for (auto& w : c.witnesses) {
      result.witnesses.push_back(std::move(w));
      if (!options.all_witnesses) break;
    }
    if (!options.all_witnesses && !result.witnesses.empty()) break;
  }
  result.passed = result.witnesses.empty();
  return result;
}

Report sweep_all(const std::vector<Identity>& identities, const CheckOptions& options) {
  Report r;
  for (const auto& id : identities) r.add(sweep(id, options));
  return r;
}

bool reproduces(const Identity& identity, const Witness& witness) {
  if (witness.index.size() != identity.extents.size()) return false;
  auto [lhs, rhs] = identity.sides(witness.index);
  return lhs == witness.lhs && rhs == witness.rhs;
}

PropertyResult single_result(std::string name, bool passed, std::string note, std::vector<Witness> witnesses) {
  PropertyResult r;
  r.name = std::move(name);
  r.passed = passed;
  r.checked = 1;
  r.note = std::move(note);
  r.witnesses = std::move(witnesses);
  return r;
}

}  // namespace superpair
