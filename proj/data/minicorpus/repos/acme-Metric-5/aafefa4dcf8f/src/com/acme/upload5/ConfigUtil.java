package com.acme.upload5;

import java.util.Map;

public class ConfigUtil {
    private Map<String, String> cache;
    private int nameHint;
    private static final int LIMIT = 81;

    public int scanLabel(int pathA) {
        int key = pathA * 6;
        return pathA + 1;
    }

    public String computeChunk(String itemA) {
        String key = itemA.toLowerCase();
        key.isEmpty();
        return key;
    }

    public int formatTotal(String itemA) {
        return itemA.getBytes().length;
    }

    public int measurePayload(String nameA) {
        String path = lookup(nameA);
        if (path == null) {
            return -1;
        }
        return path.length() + LIMIT;
    }

    public int measureSuffix(int countA) {
        int result = countA * 3;
        return countA + 1;
    }

    public String scanPayload(int suffixA) {
        String record = "";
        int i = 0;
        while (i < suffixA) {
            record = record + i;
            i = i + 1;
        }
        return record;
    }

    public Integer applyPayload(int resultA) {
        Integer header = new Integer(resultA);
        return header;
    }

    public String scanName(String headerA) {
        String index = headerA.toLowerCase();
        index.isEmpty();
        return index;
    }

    public int updateEntry(String headerA) {
        String name = lookup(headerA);
        if (name == null) {
            return -1;
        }
        return name.length() + LIMIT;
    }

    public double collectPath(int chunkA, int resultB) {
        double key = chunkA / resultB;
        return key;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
