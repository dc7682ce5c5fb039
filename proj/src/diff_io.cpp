#include "enum2c/diff_io.hpp"

#include <sstream>

namespace enum2c {

std::string format_record(const DiffRecord& r) {
    std::ostringstream out;
    if (r.is_root()) {
        out << '=';
        for (int v : r.full) out << ' ' << v;
        return out.str();
    }
    bool first = true;
    for (const auto& op : r.ops) {
        if (!first) out << ' ';
        first = false;
        out << op.sign;
        for (std::size_t i = 0; i < op.vertices.size(); ++i) {
            if (i) out << ',';
            out << op.vertices[i];
        }
    }
    return out.str();
}

namespace {

int parse_id(const std::string& tok, std::size_t& i) {
    std::size_t start = i;
    while (i < tok.size() && tok[i] >= '0' && tok[i] <= '9') ++i;
    if (i == start) throw StreamError("expected vertex id in '" + tok + "'");
    return std::stoi(tok.substr(start, i - start));
}

DiffOp parse_op(const std::string& tok) {
    if (tok.empty() || (tok[0] != '+' && tok[0] != '-'))
        throw StreamError("expected op starting with + or -, got '" + tok + "'");
    DiffOp op;
    op.sign = tok[0];
    std::size_t i = 1;
    for (;;) {
        op.vertices.push_back(parse_id(tok, i));
        if (i == tok.size()) break;
        if (tok[i] != ',') throw StreamError("malformed op '" + tok + "'");
        ++i;
    }
    return op;
}

}  // namespace

std::vector<DiffRecord> parse_diff_text(const std::string& text) {
    std::vector<DiffRecord> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        DiffRecord r;
        std::istringstream ls(line);
        std::string tok;
        if (line[0] == '=') {
            ls >> tok;  // consume '='
            long long v;
            while (ls >> v) r.full.push_back(static_cast<int>(v));
            if (r.full.empty()) throw StreamError("empty root record");
        } else {
            while (ls >> tok) r.ops.push_back(parse_op(tok));
            if (r.ops.empty()) throw StreamError("empty record line");
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace enum2c
