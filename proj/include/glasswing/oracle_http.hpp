#pragma once

#include <memory>
#include <string>

#include "glasswing/oracle.hpp"

namespace glasswing {

/// Connection settings for one provider adapter. `endpoint` is the base
/// URL (scheme://host[:port]); each adapter owns its request path.
struct ProviderConfig {
    std::string endpoint;
    std::string credential; // api key; sightengine expects "user,secret"
    std::string path;       // overrides the adapter's default request path
    long rate_limit_ms = 1000;
    int retries = 2;
    double min_confidence = 0.5;
};

std::shared_ptr<Oracle> make_google_oracle(ProviderConfig cfg);
std::shared_ptr<Oracle> make_azure_oracle(ProviderConfig cfg);
std::shared_ptr<Oracle> make_sightengine_oracle(ProviderConfig cfg);
std::shared_ptr<Oracle> make_picpurify_oracle(ProviderConfig cfg);

/// Request shaping and response parsing, kept pure so canned payloads can
/// exercise them without a network.
namespace providers {

std::string google_request_body(const RasterImage& img, Oracle::Query q);
Verdict parse_google(const std::string& body, Oracle::Query q, int img_w, int img_h);
Verdict parse_azure(const std::string& body, double min_confidence);
Verdict parse_sightengine(const std::string& body, double min_confidence);
Verdict parse_picpurify(const std::string& body, double min_confidence);

} // namespace providers

} // namespace glasswing
