#include "fockps/report.hpp"

#include <charconv>

namespace fockps {

std::string format_sig12(double v) {
    char buf[48];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

double round_sig12(double v) {
    const std::string s = format_sig12(v);
    double out = v;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

Json make_report(const std::string& command, Json inputs, Json outputs, Json provenance) {
    Json j;
    j["schema_version"] = "1.0";
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["outputs"] = std::move(outputs);
    j["provenance"] = std::move(provenance);
    return j;
}

}  // namespace fockps
