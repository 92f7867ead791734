#pragma once

#include "wstab/assignment.hpp"
#include "wstab/builders.hpp"
#include "wstab/diagram_metrics.hpp"
#include "wstab/error.hpp"
#include "wstab/filtered_complex.hpp"
#include "wstab/io.hpp"
#include "wstab/module_algebra.hpp"
#include "wstab/parallel.hpp"
#include "wstab/persistence.hpp"
#include "wstab/pht.hpp"
#include "wstab/pointcloud_metrics.hpp"
#include "wstab/stability_lab.hpp"
#include "wstab/summaries.hpp"
