#include <string>
#include <vector>
namespace coop::cli { int run(const std::vector<std::string>&); }
int main(int argc, char** argv) { return coop::cli::run({argv + 1, argv + argc}); }
