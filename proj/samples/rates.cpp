// Prints the DICKA and DIRE thresholds for each inequality.
#include <cstdio>

#include "dibound/dibound.hpp"

int main() {
    using namespace dibound;
    for (NoiseKind k : {NoiseKind::Local, NoiseKind::Global}) {
        const char* noise = k == NoiseKind::Local ? "local" : "global";
        for (const BellSpec& s : {holz(), parity_chsh(), asym_chsh(1.0)}) {
            const double p = threshold_p([&](double q) { return dicka_rate(s, NoiseModel{k, q}).rate; });
            std::printf("DICKA %-11s %-6s p > %.4f\n", s.kind == BellKind::AsymCHSH ? "asym-chsh" : s.name().c_str(), noise, p);
        }
        for (const BellSpec& s : {mabk(), holz(), parity_chsh(), chsh()}) {
            const double p = threshold_p([&](double q) { return dire_rate_spot(s, NoiseModel{k, q}, 0.0).rate; });
            std::printf("DIRE  %-11s %-6s p > %.4f\n", s.name().c_str(), noise, p);
        }
    }
}
