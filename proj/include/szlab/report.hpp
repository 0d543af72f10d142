#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "szlab/common.hpp"

namespace szlab {

/// Insertion-ordered JSON so reports serialize byte-identically.
using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

std::string format_double(double v);  // %.17g, deterministic

struct FileRecord {
    std::string name;
    uint64_t bytes = 0;
    std::string hash;  // fnv1a64 of the contents, hex
};

struct CriterionStatus {
    std::string name;
    std::string status;  // "pass" | "fail" | "report-only"
    double value = 0;
    std::string detail;
};

struct ReportManifest {
    std::string run_id;
    std::string timestamp;
    std::string config_hash;
    std::string experiment;
    std::vector<FileRecord> files;
    std::vector<CriterionStatus> criteria;

    bool all_passed() const;
    Json to_json() const;
    static ReportManifest from_json(const Json& j);
};

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

void save_manifest(const ReportManifest& m, const std::string& path);
ReportManifest load_manifest(const std::string& path);
/// Re-hashes every listed file (relative to dir) against the manifest.
void verify_manifest_files(const ReportManifest& m, const std::string& dir);

/// Minimal CSV assembly with a pinned header and deterministic floats.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void row(const std::vector<std::string>& cells);
    const std::string& str() const { return buf_; }

    static std::string cell(double v) { return format_double(v); }
    static std::string cell(uint64_t v) { return std::to_string(v); }
    static std::string cell(int v) { return std::to_string(v); }
    static std::string cell(const std::string& s) { return s; }

private:
    std::string buf_;
    size_t columns_;
};

}  // namespace szlab
