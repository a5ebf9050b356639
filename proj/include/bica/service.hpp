#ifndef BICA_SERVICE_HPP_
#define BICA_SERVICE_HPP_

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bica/agents.hpp"
#include "bica/config.hpp"
#include "bica/navigator.hpp"

namespace httplib {
class Server;
}

namespace bica::service {

struct ServiceOptions {
  Config cfg;
  std::string checkpoint_dir;  // run seed directory; empty means freshly initialized components
  uint64_t init_seed = 42;
  std::string runs_root = "runs";
  std::string trace_dir;  // live traces and navigator logs land here when set
};

struct Event {
  uint64_t seq = 0;
  std::string type;
  nlohmann::ordered_json data;
};

// Result of a service call: HTTP status plus JSON body.
struct Reply {
  int status = 200;
  nlohmann::ordered_json body;
};

class SessionService {
 public:
  explicit SessionService(ServiceOptions opts);
  ~SessionService();

  nlohmann::ordered_json vocabulary() const;

  Reply create_maptalk(const nlohmann::json& req);
  Reply maptalk_state(const std::string& id) const;
  // Body {"tokens": [names]}; an empty list holds.
  Reply submit_message(const std::string& id, const nlohmann::json& req);
  // Full JSONL trace once the episode has ended.
  std::optional<std::string> maptalk_trace(const std::string& id, int* status) const;
  // Events with seq > after; waits up to `wait` for at least one when none are pending.
  std::vector<Event> events_after(const std::string& id, uint64_t after, std::chrono::milliseconds wait,
                                  bool* finished, bool* found) const;

  Reply create_navigator(const nlohmann::json& req);
  Reply navigator_state(const std::string& id) const;
  Reply submit_click(const std::string& id, const nlohmann::json& req);
  std::optional<std::vector<uint8_t>> navigator_image(const std::string& id, int index) const;
  std::optional<std::string> navigator_log(const std::string& id) const;

  Reply list_runs() const;

  size_t session_count() const;

 private:
  struct MapTalkSession;
  struct NavSession;

  std::shared_ptr<MapTalkSession> find_maptalk(const std::string& id) const;
  std::shared_ptr<NavSession> find_nav(const std::string& id) const;

  ServiceOptions opts_;
  std::shared_ptr<const Components> comp_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<MapTalkSession>> maptalk_;
  std::map<std::string, std::shared_ptr<NavSession>> nav_;
  std::atomic<uint64_t> next_id_{1};
};

nlohmann::ordered_json invalid_session(const std::string& id);

// Registers every route of the session API on `server`.
void register_routes(httplib::Server& server, SessionService& svc);

}  // namespace bica::service

#endif  // BICA_SERVICE_HPP_
