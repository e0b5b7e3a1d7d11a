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

// Loopback JSON service over the handlers in api.hpp.

#ifndef WPL_SERVICE_HPP_
#define WPL_SERVICE_HPP_

#include <memory>
#include <string>

namespace wpl {

class Service {
 public:
  Service();
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Binds to host:port, or to a free port when port is 0. Returns the bound
  // port, or -1 on failure.
  int Bind(const std::string& host, int port);
  // Serves until Stop() is called. Requires a successful Bind.
  bool Listen();
  void Stop();
  bool running() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace wpl

#endif  // WPL_SERVICE_HPP_
