#pragma once

#include "degratio/catalog.hpp"
#include "degratio/closed_forms.hpp"
#include "degratio/connectivity.hpp"
#include "degratio/connectivity_partition.hpp"
#include "degratio/constructive.hpp"
#include "degratio/error.hpp"
#include "degratio/graph.hpp"
#include "degratio/io.hpp"
#include "degratio/named.hpp"
#include "degratio/partition.hpp"
#include "degratio/patterns.hpp"
#include "degratio/product.hpp"
#include "degratio/ratio.hpp"
#include "degratio/reductions.hpp"
#include "degratio/solver.hpp"
#include "degratio/verify.hpp"
