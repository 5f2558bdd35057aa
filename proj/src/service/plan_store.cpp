// Copyright 2026 The Thermoscope Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "plan_store.hpp"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <fstream>
#include <random>
#include <sstream>

#include "error.hpp"

namespace thermoscope {

bool is_plan_id(std::string_view id) noexcept {
  return id.size() == 32 && std::all_of(id.begin(), id.end(), [](char c) {
           return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
         });
}

std::string random_token() {
  thread_local std::mt19937_64 rng{[] {
    std::random_device rd;
    std::seed_seq seq{rd(), rd(), rd(), rd()};
    return std::mt19937_64(seq);
  }()};
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(rng()),
                static_cast<unsigned long long>(rng()));
  return buf;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp-" + random_token();
  const int fd = ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_EXCL | O_CLOEXEC, 0644);
  if (fd < 0) throw Error(ErrorCode::io, "cannot create " + tmp.string() + ": " + std::strerror(errno));
  std::size_t done = 0;
  while (done < content.size()) {
    const auto n = ::write(fd, content.data() + done, content.size() - done);
    if (n < 0) {
      if (errno == EINTR) continue;
      const std::string reason = std::strerror(errno);
      ::close(fd);
      ::unlink(tmp.c_str());
      throw Error(ErrorCode::io, "write failed for " + tmp.string() + ": " + reason);
    }
    done += static_cast<std::size_t>(n);
  }
  if (::fsync(fd) != 0 || ::close(fd) != 0) {
    ::unlink(tmp.c_str());
    throw Error(ErrorCode::io, "cannot flush " + tmp.string());
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    const std::string reason = std::strerror(errno);
    ::unlink(tmp.c_str());
    throw Error(ErrorCode::io, "cannot rename into " + path.string() + ": " + reason);
  }
}

namespace {

std::string utc_now() {
  const auto now = std::chrono::system_clock::now();
  const auto micros = std::chrono::duration_cast<std::chrono::microseconds>(now.time_since_epoch()).count();
  const std::time_t secs = static_cast<std::time_t>(micros / 1000000);
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d.%06lldZ", tm.tm_year + 1900, tm.tm_mon + 1,
                tm.tm_mday, tm.tm_hour, tm.tm_min, tm.tm_sec, static_cast<long long>(micros % 1000000));
  return buf;
}

std::optional<PlanRecord> read_record(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream ss;
  ss << in.rdbuf();
  auto j = nlohmann::json::parse(ss.str(), nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    throw Error(ErrorCode::io, "stored plan " + path.string() + " is not valid JSON");
  }
  PlanRecord r;
  r.id = j.value("id", "");
  r.created_at = j.value("created_at", "");
  r.spec = j.value("spec", nlohmann::json());
  r.plan = j.value("plan", nlohmann::json());
  return r;
}

}  // namespace

PlanStore::PlanStore(std::filesystem::path root) : root_(std::move(root)) {
  std::error_code ec;
  std::filesystem::create_directories(root_, ec);
  if (ec) throw Error(ErrorCode::io, "cannot create plan store " + root_.string() + ": " + ec.message());
}

std::filesystem::path PlanStore::path_for(std::string_view id) const {
  return root_ / (std::string(id) + ".json");
}

PlanRecord PlanStore::put(nlohmann::json spec, nlohmann::json plan) {
  PlanRecord r{random_token(), utc_now(), std::move(spec), std::move(plan)};
  const nlohmann::json doc = {{"id", r.id}, {"created_at", r.created_at}, {"spec", r.spec}, {"plan", r.plan}};
  write_file_atomic(path_for(r.id), doc.dump(2) + "\n");
  return r;
}

std::optional<PlanRecord> PlanStore::get(std::string_view id) const {
  if (!is_plan_id(id)) return std::nullopt;
  return read_record(path_for(id));
}

std::vector<PlanSummary> PlanStore::list() const {
  std::vector<PlanSummary> out;
  for (const auto& entry : std::filesystem::directory_iterator(root_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    const auto stem = entry.path().stem().string();
    if (!is_plan_id(stem)) continue;
    // A concurrent delete may remove the file between listing and reading.
    if (const auto r = read_record(entry.path())) out.push_back({r->id, r->created_at});
  }
  std::sort(out.begin(), out.end(), [](const PlanSummary& a, const PlanSummary& b) {
    return a.created_at != b.created_at ? a.created_at < b.created_at : a.id < b.id;
  });
  return out;
}

bool PlanStore::remove(std::string_view id) {
  if (!is_plan_id(id)) return false;
  std::error_code ec;
  const bool removed = std::filesystem::remove(path_for(id), ec);
  if (ec) throw Error(ErrorCode::io, "cannot delete plan " + std::string(id) + ": " + ec.message());
  return removed;
}

}  // namespace thermoscope
