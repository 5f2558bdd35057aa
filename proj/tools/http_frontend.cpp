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

#include "http_frontend.hpp"

#include <httplib.h>

namespace thermoscope::http {

struct Server::Impl {
  ts_service* service;
  httplib::Server server;
};

namespace {

void forward(ts_service* service, const httplib::Request& req, httplib::Response& res) {
  int32_t status = 500;
  char* body = nullptr;
  size_t length = 0;
  char* type = nullptr;
  const auto rc = ts_service_handle(service, req.method.c_str(), req.path.c_str(), req.body.data(), req.body.size(),
                                    &status, &body, &length, &type);
  if (rc != TS_OK) {
    res.status = 500;
    res.set_content(std::string("{\"error\":{\"code\":\"internal\",\"message\":\"") + ts_status_name(rc) + "\"}}",
                    "application/json");
    return;
  }
  res.status = status;
  res.set_content(std::string(body, length), type);
  ts_string_free(body);
  ts_string_free(type);
}

}  // namespace

Server::Server(ts_service* service) : impl_(std::make_unique<Impl>()) {
  impl_->service = service;
  auto handler = [this](const httplib::Request& req, httplib::Response& res) { forward(impl_->service, req, res); };
  impl_->server.Get(".*", handler);
  impl_->server.Post(".*", handler);
  impl_->server.Delete(".*", handler);
  impl_->server.set_payload_max_length(64u << 20);
}

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool Server::listen() { return impl_->server.listen_after_bind(); }

void Server::stop() { impl_->server.stop(); }

}  // namespace thermoscope::http
