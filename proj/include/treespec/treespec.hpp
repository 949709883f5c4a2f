#pragma once

#include <treespec/charpoly.hpp>
#include <treespec/config.hpp>
#include <treespec/cover.hpp>
#include <treespec/rational.hpp>
#include <treespec/sign_graph.hpp>
#include <treespec/spectral.hpp>
#include <treespec/tree.hpp>
#include <treespec/verify.hpp>
