#pragma once
// Single-fault edits of an explicit-mode spanner file, each of which verification must reject.

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gspan/io.h"

namespace gspan_test {

inline std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

inline std::vector<std::string> words_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

inline std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

inline std::string scaled(const std::string& word, double f) {
    return gspan::format_double(std::stod(word) * f);
}

// Needs an explicit-mode file with at least one edge carrying two via points.
inline std::vector<std::pair<std::string, std::string>> spanner_mutations(const std::string& text) {
    auto L = lines_of(text);
    std::vector<std::size_t> edge_lines;
    std::size_t two_via = 0, one_via = 0;
    for (std::size_t i = 0; i < L.size(); ++i)
        if (L[i].rfind("edge ", 0) == 0) {
            edge_lines.push_back(i);
            auto w = words_of(L[i]);
            if (w[6] == "2" && !two_via) two_via = i;
            if (w[6] != "0" && !one_via) one_via = i;
        }
    auto H = words_of(L[1]);
    std::size_t e0 = edge_lines.at(0);
    auto E0 = words_of(L[e0]);
    int n = std::stoi(H[1]);
    std::vector<std::pair<std::string, std::string>> out;
    auto with_line = [&](std::size_t at, const std::vector<std::string>& w) {
        auto M = L;
        M[at] = join(w, " ");
        return join(M, "\n") + "\n";
    };
    auto with_header = [&](int field, const std::string& v) {
        auto w = H;
        w[field] = v;
        return with_line(1, w);
    };
    auto with_edge = [&](std::size_t at, int field, const std::string& v) {
        auto w = words_of(L[at]);
        w[field] = v;
        return with_line(at, w);
    };

    {
        // every edge of site 0 removed, header kept consistent
        std::vector<std::string> M;
        int removed = 0;
        for (std::size_t i = 0; i < L.size(); ++i) {
            if (L[i].rfind("edge ", 0) == 0) {
                auto w = words_of(L[i]);
                if (w[1] == "0" || w[2] == "0") {
                    ++removed;
                    if (i + 1 < L.size() && L[i + 1].rfind("path ", 0) == 0) ++i;
                    continue;
                }
            }
            M.push_back(L[i]);
        }
        auto h = H;
        h[13] = std::to_string(std::stoi(H[13]) - removed);
        M[1] = join(h, " ");
        out.push_back({"disconnected site", join(M, "\n") + "\n"});
    }
    out.push_back({"length increased", with_edge(e0, 3, scaled(E0[3], 1.01))});
    out.push_back({"length decreased", with_edge(e0, 3, scaled(E0[3], 0.99))});
    out.push_back({"length off by 1e-6", with_edge(e0, 3, scaled(E0[3], 1 + 1e-6))});
    out.push_back({"complexity increased", with_edge(e0, 4, std::to_string(std::stoi(E0[4]) + 1))});
    out.push_back({"complexity decreased", with_edge(e0, 4, std::to_string(std::stoi(E0[4]) - 1))});
    out.push_back({"via point moved", with_edge(one_via, 7, scaled(words_of(L[one_via])[7], 1.001))});
    {
        auto w = words_of(L[one_via]);
        w[7] = w[8] = "1e9";
        out.push_back({"via point outside", with_line(one_via, w)});
    }
    {
        auto w = words_of(L[two_via]);
        w[6] = "1";
        w.resize(9);
        out.push_back({"via point dropped", with_line(two_via, w)});
    }
    {
        int b = std::stoi(E0[2]), a = std::stoi(E0[1]);
        int c = 0;
        while (c == a || c == b) ++c;
        out.push_back({"endpoint replaced", with_edge(e0, 2, std::to_string(c))});
    }
    out.push_back({"endpoint out of range", with_edge(e0, 1, std::to_string(n))});
    out.push_back({"self loop", with_edge(e0, 2, E0[1])});
    {
        auto M = L;
        M.insert(M.begin() + static_cast<long>(e0), L[e0]);
        if (L[e0 + 1].rfind("path ", 0) == 0) M.insert(M.begin() + static_cast<long>(e0) + 1, L[e0 + 1]);
        auto h = H;
        h[13] = std::to_string(std::stoi(H[13]) + 1);
        M[1] = join(h, " ");
        out.push_back({"duplicate edge", join(M, "\n") + "\n"});
    }
    out.push_back({"header ratio", with_header(11, scaled(H[11], 1.1))});
    out.push_back({"header n", with_header(1, std::to_string(n + 1))});
    out.push_back({"header m", with_header(3, std::to_string(std::stoi(H[3]) + 1))});
    out.push_back({"header edge count", with_header(13, std::to_string(std::stoi(H[13]) + 1))});
    {
        auto M = L;
        M[0] = "gspan-spanner 2";
        out.push_back({"unknown version", join(M, "\n") + "\n"});
    }
    {
        auto w = words_of(L[e0 + 1]);
        w[4] = scaled(w[4], 1.001);
        out.push_back({"explicit path moved", with_line(e0 + 1, w)});
    }
    {
        auto M = L;
        M.pop_back();
        out.push_back({"missing end", join(M, "\n") + "\n"});
    }
    return out;
}

}  // namespace gspan_test
