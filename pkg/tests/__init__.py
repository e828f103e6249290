# SPDX-FileCopyrightText: Datadog, Inc. <dev@datadoghq.com>
#
# SPDX-License-Identifier: MIT
