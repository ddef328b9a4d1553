// Runs every acceptance criterion on its default grid and prints one line per
// criterion. Full reports go to acceptance_reports.jsonl in the working directory.

#include <cctype>
#include <cstdio>
#include <fstream>

#include "psgl2/serialize.hpp"

int main() {
    using namespace psgl2;
    std::ofstream jsonl("acceptance_reports.jsonl");
    int failed = 0;
    for (const auto& id : check_ids()) {
        const CheckReport R = run_check(id, {});
        jsonl << to_json(R).dump() << "\n";
        std::string status = to_string(R.status);
        for (char& c : status) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        std::printf("%-4s %-9s %7.2fs  %s\n", id.c_str(), status.c_str(), R.wall_time, R.title.c_str());
        for (std::size_t i = 0; i < R.witnesses.size() && i < 3 && R.status != Status::Pass; ++i)
            std::printf("              %s\n", R.witnesses[i].c_str());
        std::fflush(stdout);
        failed += R.status != Status::Pass;
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(check_ids().size()) - failed, check_ids().size());
    return failed == 0 ? 0 : 1;
}
