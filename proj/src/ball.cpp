#include "nct/ball.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <unordered_map>

#include "nct/io.hpp"

namespace nct {

std::pair<size_t, size_t> Ball::sphere_range(int m) const {
    auto lo = std::lower_bound(word_lengths.begin(), word_lengths.end(), m);
    auto hi = std::upper_bound(word_lengths.begin(), word_lengths.end(), m);
    return {size_t(lo - word_lengths.begin()), size_t(hi - word_lengths.begin())};
}

Ball ball_enumerate(const GroupDesc& group, int m) {
    if (m < 0) throw std::invalid_argument("ball radius must be >= 0");
    std::unordered_map<GroupElement, int, GroupElementHash> dist;
    std::deque<GroupElement> frontier;
    GroupElement e = identity(group);
    dist[e] = 0;
    frontier.push_back(e);
    std::vector<GroupElement> gens;
    for (int i = 0; i < group.generator_count(); ++i) {
        gens.push_back(generator(group, i, false));
        gens.push_back(generator(group, i, true));
    }
    while (!frontier.empty()) {
        GroupElement cur = frontier.front();
        frontier.pop_front();
        int d = dist[cur];
        if (d == m) continue;
        for (const auto& s : gens) {
            GroupElement nxt = compose(cur, s);
            if (dist.emplace(nxt, d + 1).second) frontier.push_back(nxt);
        }
    }

    Ball ball{group, m, {}, {}};
    ball.elements.reserve(dist.size());
    for (auto& [el, d] : dist) ball.elements.push_back(el);
    std::sort(ball.elements.begin(), ball.elements.end(),
              [&dist](const GroupElement& a, const GroupElement& b) {
                  int da = dist.find(a)->second, db = dist.find(b)->second;
                  if (da != db) return da < db;
                  return payload_less(a, b);
              });
    ball.word_lengths.reserve(ball.elements.size());
    for (const auto& el : ball.elements) ball.word_lengths.push_back(dist.find(el)->second);
    return ball;
}

long long free_ball_count(int p, int m) {
    if (m <= 0) return 1;
    long long pw = 1;
    for (int i = 0; i < m; ++i) pw *= (2 * p - 1);
    return 1 + (long long)p * (pw - 1) / (p - 1);
}

long long free_ball_count_paper(int p, int m) {
    long long pw = 1;
    for (int i = 0; i < m; ++i) pw *= (2 * p - 1);
    return 1 + (long long)p * pw / (p - 1);
}

std::vector<double> counting_spectrum(const NegativeTypeFunction& ell, const Ball& ball) {
    std::vector<double> vals;
    vals.reserve(ball.size());
    for (const auto& g : ball.elements) {
        double v = ell(g);
        if (v > 0.0) vals.push_back(v);
    }
    std::sort(vals.begin(), vals.end());
    return vals;
}

std::vector<double> ds_spectrum(const NegativeTypeFunction& ell, const Ball& ball) {
    std::vector<double> lam = counting_spectrum(ell, ball);
    std::vector<double> mu;
    mu.reserve(2 * lam.size());
    for (double v : lam) {
        double s = 1.0 / std::sqrt(v);
        mu.push_back(s);
        mu.push_back(s);
    }
    return mu;  // lam ascending => mu descending
}

void write_ball_cache(const Ball& ball, const std::string& path) {
    std::string body;
    {
        char head[96];
        std::snprintf(head, sizeof head, "group=%s m=%d count=%zu\n", ball.group.id().c_str(),
                      ball.radius, ball.size());
        body = head;
    }
    for (size_t i = 0; i < ball.size(); ++i) {
        body += format_payload(ball.elements[i]);
        body += '\t';
        body += std::to_string(ball.word_lengths[i]);
        body += '\n';
    }
    atomic_write_file(path, body);
}

std::optional<Ball> read_ball_cache(const GroupDesc& group, int m, const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::string head;
    if (!std::getline(in, head)) return std::nullopt;
    char gid[32];
    int fm = -1;
    size_t count = 0;
    if (std::sscanf(head.c_str(), "group=%31s m=%d count=%zu", gid, &fm, &count) != 3)
        return std::nullopt;
    if (gid != group.id() || fm != m) return std::nullopt;
    Ball ball{group, m, {}, {}};
    ball.elements.reserve(count);
    ball.word_lengths.reserve(count);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) return std::nullopt;
        ball.elements.push_back(parse_payload(group, line.substr(0, tab)));
        ball.word_lengths.push_back(std::atoi(line.c_str() + tab + 1));
    }
    if (ball.size() != count) return std::nullopt;
    return ball;
}

Ball cached_ball(const GroupDesc& group, int m, const std::string& cache_dir) {
    namespace fs = std::filesystem;
    fs::path dir = fs::path(cache_dir) / group.id();
    fs::path file = dir / (std::to_string(m) + ".ball");
    if (auto ball = read_ball_cache(group, m, file.string())) return *ball;
    Ball ball = ball_enumerate(group, m);
    std::error_code ec;
    fs::create_directories(dir, ec);
    write_ball_cache(ball, file.string());
    return ball;
}

}  // namespace nct
