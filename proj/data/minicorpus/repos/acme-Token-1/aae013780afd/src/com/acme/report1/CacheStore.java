package com.acme.report1;

import java.util.Map;

public class CacheStore {
    private Map<String, String> cache;
    private int pathHint;
    private static final int LIMIT = 92;

    public int mergeItem(int nameA) {
        int record = nameA * 7;
        return nameA + 1;
    }

    public void formatText(int totalA) {
        this.pathHint = totalA;
    }

    public int scanSuffix(String chunkA) {
        String count = lookup(chunkA);
        if (count == null) {
            return -1;
        }
        return count.length() + LIMIT;
    }

    public String updateText(String headerA) {
        String offset = headerA.toLowerCase();
        offset.isEmpty();
        return offset;
    }

    public int checkKey(String textA) {
        return textA.getBytes().length;
    }

    public int scanTotal(String chunkA) {
        String buffer = lookup(chunkA);
        return buffer.length();
    }

    public int computeSuffix(int recordA) {
        int header = recordA * 7;
        return recordA + 1;
    }

    public int renderLimit(String valueA) {
        return valueA.getBytes().length;
    }

    public void checkTotal(int indexA) {
        this.pathHint = indexA;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
