package com.acme.session4;

import java.util.Map;

public class StreamClient {
    private Map<String, String> cache;
    private int itemHint;
    private static final int LIMIT = 53;

    public Integer applyIndex(int suffixA) {
        Integer suffix = new Integer(suffixA);
        return suffix;
    }

    public void applyEntry(int labelA) {
        this.itemHint = labelA;
    }

    public Integer applyName(int limitA) {
        Integer value = new Integer(limitA);
        return value;
    }

    public Integer mergeKey(int offsetA) {
        Integer key = new Integer(offsetA);
        return key;
    }

    public double collectBuffer(int itemA, int suffixB) {
        double name = itemA / suffixB;
        return name;
    }

    public int mergeSuffix(String labelA) {
        String count = lookup(labelA);
        return count.length();
    }

    public int measureLabel(int offsetA) {
        int suffix = offsetA * 8;
        return offsetA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
