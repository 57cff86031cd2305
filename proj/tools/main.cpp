#include "polyhopf/cli.hpp"

int main(int argc, char **argv)
{
	std::vector<std::string> args(argv + 1, argv + argc);
	return polyhopf::run(args, std::cout, std::cerr);
}
