#include "szlab/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace szlab {

std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

bool ReportManifest::all_passed() const {
    for (const CriterionStatus& c : criteria) {
        if (c.status == "fail") return false;
    }
    return true;
}

Json ReportManifest::to_json() const {
    Json j;
    j["schema"] = kSchemaVersion;
    j["run_id"] = run_id;
    j["timestamp"] = timestamp;
    j["config_hash"] = config_hash;
    j["experiment"] = experiment;
    Json jf = Json::array();
    for (const FileRecord& f : files) {
        jf.push_back({{"name", f.name}, {"bytes", f.bytes}, {"fnv1a64", f.hash}});
    }
    j["files"] = jf;
    Json jc = Json::array();
    for (const CriterionStatus& c : criteria) {
        jc.push_back(
            {{"name", c.name}, {"status", c.status}, {"value", c.value}, {"detail", c.detail}});
    }
    j["criteria"] = jc;
    return j;
}

ReportManifest ReportManifest::from_json(const Json& j) {
    if (!j.contains("schema") || j["schema"].get<int>() != kSchemaVersion) {
        throw std::runtime_error("manifest: unsupported schema version");
    }
    ReportManifest m;
    m.run_id = j["run_id"].get<std::string>();
    m.timestamp = j["timestamp"].get<std::string>();
    m.config_hash = j["config_hash"].get<std::string>();
    m.experiment = j["experiment"].get<std::string>();
    for (const Json& f : j["files"]) {
        m.files.push_back(
            {f["name"].get<std::string>(), f["bytes"].get<uint64_t>(),
             f["fnv1a64"].get<std::string>()});
    }
    for (const Json& c : j["criteria"]) {
        m.criteria.push_back({c["name"].get<std::string>(), c["status"].get<std::string>(),
                              c["value"].get<double>(), c["detail"].get<std::string>()});
    }
    return m;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), std::streamsize(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void save_manifest(const ReportManifest& m, const std::string& path) {
    write_text_file(path, m.to_json().dump(2) + "\n");
}

ReportManifest load_manifest(const std::string& path) {
    return ReportManifest::from_json(Json::parse(read_text_file(path)));
}

void verify_manifest_files(const ReportManifest& m, const std::string& dir) {
    for (const FileRecord& f : m.files) {
        std::string content = read_text_file(dir + "/" + f.name);
        if (content.size() != f.bytes || hex64(fnv1a64(content)) != f.hash) {
            throw std::runtime_error("manifest verification failed for " + f.name);
        }
    }
}

CsvWriter::CsvWriter(std::vector<std::string> header) : columns_(header.size()) {
    for (size_t i = 0; i < header.size(); ++i) {
        if (i) buf_ += ',';
        buf_ += header[i];
    }
    buf_ += '\n';
}

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != columns_) throw std::invalid_argument("CsvWriter: column count mismatch");
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) buf_ += ',';
        buf_ += cells[i];
    }
    buf_ += '\n';
}

}  // namespace szlab
