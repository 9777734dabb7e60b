#pragma once

#include "tuttekit/bipoly.hpp"
#include "tuttekit/errors.hpp"
#include "tuttekit/families.hpp"
#include "tuttekit/farey.hpp"
#include "tuttekit/generators.hpp"
#include "tuttekit/graph.hpp"
#include "tuttekit/graph_io.hpp"
#include "tuttekit/limits.hpp"
#include "tuttekit/oracle.hpp"
#include "tuttekit/rational.hpp"
#include "tuttekit/serialize.hpp"
#include "tuttekit/unipoly.hpp"
