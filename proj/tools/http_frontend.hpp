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

// HTTP front end for the JSON service: every request is forwarded to
// ts_service_handle. No authentication; bind to loopback unless the network
// is trusted.

#pragma once

#include <memory>
#include <string>

#include "thermoscope/thermoscope.h"

namespace thermoscope::http {

class Server {
 public:
  /// Does not take ownership of `service`.
  explicit Server(ts_service* service);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds; port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Serves on the calling thread until stop().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace thermoscope::http
