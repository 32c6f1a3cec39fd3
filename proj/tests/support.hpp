#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "phylocount/network.hpp"

inline phylocount::PhyloNetwork load_fixture(const std::string& name) {
    std::ifstream in(std::string(PHYLOCOUNT_DATA_DIR) + "/" + name);
    std::stringstream ss;
    ss << in.rdbuf();
    return phylocount::parse_network(ss.str());
}
