#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "eh/descriptions.hpp"

namespace {

void usage(std::ostream& os) {
    os << "usage: ehp <description-file> <command> [args]\n"
          "commands:\n"
          "  homology <name> <a..b>   print homology groups per degree\n"
          "  verify <name>            run the verification suites\n"
          "  inspect <name>           dump basis counts and intermediates\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.size() < 2) {
        usage(std::cerr);
        return 2;
    }
    std::ifstream in(args[0]);
    if (!in) {
        std::cerr << "cannot open '" << args[0] << "'\n";
        return 2;
    }
    std::ostringstream text;
    text << in.rdbuf();
    eh::RunResult result = eh::run_command(text.str(), {args.begin() + 1, args.end()});
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
