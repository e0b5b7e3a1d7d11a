// Copyright 2026 The wpl Authors
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

#include "wpl/service.hpp"

#include "httplib.h"
#include "wpl/api.hpp"

namespace wpl {

struct Service::Impl {
  httplib::Server server;
};

namespace {

void Forward(const httplib::Request& req, httplib::Response& res) {
  const api::Response out = api::Handle(req.method, req.path, req.body);
  res.status = out.status;
  res.set_content(out.body, "application/json");
}

}  // namespace

Service::Service() : impl_(std::make_unique<Impl>()) {
  httplib::Server& s = impl_->server;
  s.Get(R"(/fixtures(/[^/]+)?)", Forward);
  s.Post(R"(/(mutate|apply|iso|search|bundle/eq|replay/[^/]+))", Forward);
  // Unmatched routes still answer with a JSON body.
  s.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    const api::Response out = api::Handle(req.method, req.path, req.body);
    res.set_content(out.body, "application/json");
  });
}

Service::~Service() { Stop(); }

int Service::Bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool Service::Listen() { return impl_->server.listen_after_bind(); }

void Service::Stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

bool Service::running() const { return impl_->server.is_running(); }

}  // namespace wpl
