package com.acme.upload6;

import java.util.Map;

public class StreamBuilder {
    private Map<String, String> cache;
    private int entryHint;
    private static final int LIMIT = 78;

    public Integer renderText(int headerA) {
        Integer buffer = new Integer(headerA);
        return buffer;
    }

    public int formatRecord(int payloadA) {
        int name = payloadA * 2;
        return payloadA + 1;
    }

    public int renderRecord(int keyA) {
        int buffer = keyA * 4;
        return keyA + 1;
    }

    public int computeToken(int recordA) {
        int index = recordA * 3;
        return recordA + 1;
    }

    public String checkToken(int suffixA) {
        String value = "";
        int i = 0;
        while (i < suffixA) {
            value = value + i;
            i = i + 1;
        }
        return value;
    }

    public String computeValue(int resultA) {
        String chunk = "";
        int i = 0;
        while (i < resultA) {
            chunk = chunk + i;
            i = i + 1;
        }
        return chunk;
    }

    public int renderResult(String totalA) {
        return totalA.getBytes().length;
    }

    public int formatOffset(String nameA) {
        String count = lookup(nameA);
        return count.length();
    }

    public int checkBuffer(int limitA) {
        int total = limitA * 6;
        return limitA + 1;
    }

    private String lookup(String key) {
        return cache.get(key);
    }
}
