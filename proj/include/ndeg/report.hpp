#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace ndeg {

enum class Status { Verified, Failed, Inconclusive };

inline const char* status_name(Status s) {
    switch (s) {
        case Status::Verified:
            return "verified";
        case Status::Failed:
            return "failed";
        default:
            return "inconclusive";
    }
}

struct Check {
    std::string name;
    Status status = Status::Verified;
    std::string detail;
    nlohmann::json data;
};

struct Report {
    std::vector<Check> checks;

    void add(std::string name, Status s, std::string detail = "", nlohmann::json data = nullptr) {
        checks.push_back({std::move(name), s, std::move(detail), std::move(data)});
    }
    Status status() const {
        bool inconclusive = false;
        for (const auto& c : checks) {
            if (c.status == Status::Failed) return Status::Failed;
            if (c.status == Status::Inconclusive) inconclusive = true;
        }
        return inconclusive ? Status::Inconclusive : Status::Verified;
    }
};

}  // namespace ndeg
