/*
   Copyright 2026 The heightzeta developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Result cache: JSON-lines records {"key_hash", "checksum", "payload"}
// under the directory named by HEIGHTZETA_CACHE_DIR. Entries whose
// checksum does not match the stored payload are treated as missing and
// recomputed. Writes go through an advisory lock file; if the lock cannot
// be taken the cache silently degrades to read-only.

#ifndef HEIGHTZETA_CACHE_HPP
#define HEIGHTZETA_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <json.hpp>

#include "heightzeta/errors.hpp"

namespace hz {

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

inline std::string fnv1a_hex(const std::string& s) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a(s)));
    return buf;
}

class Cache {
 public:
    /// Root from HEIGHTZETA_CACHE_DIR; disabled when unset.
    static Cache from_env() {
        const char* dir = std::getenv("HEIGHTZETA_CACHE_DIR");
        return Cache(dir ? std::string(dir) : std::string());
    }

    explicit Cache(std::string dir) : dir_(std::move(dir)) {}

    bool enabled() const { return !dir_.empty(); }

    std::optional<nlohmann::json> load(const std::string& key) const {
        if (!enabled()) return std::nullopt;
        std::ifstream in(file_path());
        if (!in) return std::nullopt;
        const std::string want = fnv1a_hex(key);
        std::string line;
        std::optional<nlohmann::json> found;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            nlohmann::json rec = nlohmann::json::parse(line, nullptr, false);
            if (rec.is_discarded()) continue;  // corrupt line: skip
            if (!rec.contains("key_hash") || rec["key_hash"] != want) continue;
            if (!rec.contains("payload") || !rec.contains("checksum")) continue;
            std::string dump = rec["payload"].dump();
            if (rec["checksum"] != fnv1a_hex(dump)) continue;  // tampered
            found = rec["payload"];  // last valid record wins
        }
        return found;
    }

    /// Append a record; IO failures surface as hz::io_error except that a
    /// busy advisory lock downgrades the store to a no-op.
    void store(const std::string& key, const nlohmann::json& payload) const {
        if (!enabled()) return;
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) throw io_error("cannot create cache dir " + dir_);

        const std::string lock = dir_ + "/cache.lock";
        std::ofstream lk(lock, std::ios::out | std::ios::app);
        if (!lk) return;  // busy or unwritable: degrade to read-only
        {
            std::ofstream out(file_path(), std::ios::app);
            if (!out) {
                std::filesystem::remove(lock, ec);
                throw io_error("cannot append to cache file");
            }
            nlohmann::json rec;
            rec["key_hash"] = fnv1a_hex(key);
            rec["checksum"] = fnv1a_hex(payload.dump());
            rec["payload"] = payload;
            out << rec.dump() << "\n";
        }
        fs::remove(lock, ec);
    }

    std::string file_path() const { return dir_ + "/cache.jsonl"; }

 private:
    std::string dir_;
};

}  // namespace hz

#endif  // HEIGHTZETA_CACHE_HPP
