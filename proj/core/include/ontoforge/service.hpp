#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "ontoforge/config.hpp"

namespace ontoforge::service {

/// Test seams. `on_job_start` runs on the worker thread after a learn or
/// index job has claimed the job slot and before any work is done.
struct Hooks {
  std::function<void(std::string_view job)> on_job_start;
};

/// HTTP/JSON front end over the pipeline. Artifacts already present under
/// work_dir are loaded at construction; learn and index replace them.
class Server {
 public:
  explicit Server(config::PipelineConfig cfg, Hooks hooks = {});
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds and serves on a background thread. Port 0 picks a free port.
  /// Returns the bound port; throws IoError when binding fails.
  int start(const std::string& host, int port);
  /// Binds and serves on the calling thread until stop().
  void run(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ontoforge::service
